#include "folclass/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <array>
#include <exception>
#include <mutex>
#include <thread>

#include "folclass/error.hpp"

namespace folclass {

namespace {

void require_char2(const FieldSpec& field) {
  if (field.characteristic() != 2)
    throw DomainError("enumeration requires characteristic 2, got " + field.name());
}

// Runs work(block) for block in [0, blocks) on `jobs` threads and returns the results in block
// order, so the output is independent of scheduling.
template <class Work>
auto run_blocks(std::uint64_t blocks, unsigned jobs, Work work) {
  using Result = decltype(work(std::uint64_t{0}));
  std::vector<Result> out(blocks);
  jobs = std::max(1u, jobs);
  if (jobs == 1 || blocks <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) out[b] = work(b);
    return out;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(jobs, blocks));
  for (unsigned i = 0; i < n; ++i)
    pool.emplace_back([&] {
      for (std::uint64_t b; (b = next.fetch_add(1)) < blocks;) {
        try {
          out[b] = work(b);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = blocks;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

std::uint64_t triple_count(const FieldSpec& field) {
  std::uint64_t n = 1;
  for (int i = 0; i < 8; ++i) n *= field.order();
  return n - 1;
}

DerivationTriple triple_at(const FieldSpec& field, LieCase lie_case, std::uint64_t index) {
  const std::uint64_t q = field.order();
  std::array<FieldSpec::Value, 8> digit{};  // c0 c1 c2 c3 b0 b1 a0 a1
  for (auto& d : digit) {
    d = static_cast<FieldSpec::Value>(index % q);
    index /= q;
  }
  return {lie_case, Poly(field, {digit[6], digit[7]}), Poly(field, {digit[4], digit[5]}),
          Poly(field, {digit[0], digit[1], digit[2], digit[3]})};
}

void enumerate_triples(const FieldSpec& field, LieCase lie_case,
                       const std::function<void(const DerivationTriple&)>& visit) {
  require_char2(field);
  const std::uint64_t n = triple_count(field);
  for (std::uint64_t i = 1; i <= n; ++i) visit(triple_at(field, lie_case, i));
}

bool is_class_representative(const DerivationTriple& d) {
  for (const Poly* f : {&d.a(), &d.b(), &d.c()})
    for (std::size_t i = f->size(); i-- > 0;)
      if (f->raw(i) != 0) return f->raw(i) == 1;
  return false;
}

ValidSet find_valid(const FieldSpec& field, LieCase lie_case, const EnumerationOptions& opts) {
  require_char2(field);
  const std::uint64_t n = triple_count(field);
  const std::uint64_t block = std::max<std::uint64_t>(1, opts.block_size);
  const std::uint64_t blocks = (n + block - 1) / block;

  struct Partial {
    std::uint64_t valid = 0;
    std::vector<DerivationTriple> reps;
  };
  auto parts = run_blocks(blocks, opts.jobs, [&](std::uint64_t b) {
    Partial part;
    const std::uint64_t lo = 1 + b * block;
    const std::uint64_t hi = std::min(n, lo + block - 1);
    for (std::uint64_t i = lo; i <= hi; ++i) {
      DerivationTriple d = triple_at(field, lie_case, i);
      if (!is_valid_foliation(d)) continue;
      ++part.valid;
      if (is_class_representative(d)) part.reps.push_back(std::move(d));
    }
    return part;
  });

  ValidSet out;
  out.total_triples = n;
  for (auto& part : parts) {
    out.valid_count += part.valid;
    for (auto& d : part.reps) out.classes.push_back(std::move(d));
  }
  return out;
}

bool SoundnessReport::passed() const {
  return std::all_of(families.begin(), families.end(),
                     [](const FamilySoundness& f) { return f.failures == 0; });
}

SoundnessReport verify_soundness(const FieldSpec& field, LieCase lie_case, std::size_t max_examples) {
  require_char2(field);
  SoundnessReport report;
  report.field = &field;
  report.lie_case = lie_case;
  const auto elements = enumerate_elements(field);
  for (FamilyId f : families_of(lie_case)) {
    FamilySoundness stats{f};
    std::size_t examples = 0;
    const auto names = required_params(f);
    std::vector<std::size_t> counter(names.size(), 0);
    for (;;) {
      FamilyParams params;
      for (std::size_t i = 0; i < names.size(); ++i) params.get(names[i]) = elements[counter[i]];
      if (params_violation(f, params)) {
        ++stats.rejected;
      } else {
        ++stats.instances;
        DerivationTriple d = instantiate(f, params, field);
        if (!is_valid_foliation(d)) {
          ++stats.failures;
          if (examples++ < max_examples)
            report.counterexamples.push_back({f, params, d, violated_conditions(d)});
        }
      }
      std::size_t i = names.size();
      while (i > 0 && ++counter[i - 1] == elements.size()) counter[--i] = 0;
      if (i == 0) break;
    }
    report.families.push_back(stats);
  }
  return report;
}

EnumerationReport verify_completeness(const FieldSpec& field, LieCase lie_case, unsigned max_ext,
                                      const EnumerationOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  ValidSet valid = find_valid(field, lie_case, opts);

  EnumerationReport report;
  report.field = &field;
  report.lie_case = lie_case;
  report.max_ext = max_ext;
  report.total_triples = valid.total_triples;
  report.valid_count = valid.valid_count;
  report.scalar_classes = valid.classes.size();

  const std::uint64_t per_block = 16;
  const std::uint64_t blocks = (valid.classes.size() + per_block - 1) / per_block;
  auto parts = run_blocks(blocks, opts.jobs, [&](std::uint64_t b) {
    std::vector<std::vector<FamilyMatch>> out;
    const std::size_t lo = b * per_block;
    const std::size_t hi = std::min<std::size_t>(valid.classes.size(), lo + per_block);
    for (std::size_t i = lo; i < hi; ++i) out.push_back(classify(valid.classes[i], max_ext));
    return out;
  });

  std::size_t i = 0;
  for (auto& part : parts)
    for (auto& matches : part) {
      const DerivationTriple& d = valid.classes[i++];
      (d.c().is_zero() ? report.classes_c_zero : report.classes_c_nonzero)++;
      if (matches.empty()) {
        report.unmatched.push_back(d);
      } else {
        ++report.matched;
        unsigned least = matches.front().ext;
        std::vector<FamilyId> families;
        for (const auto& m : matches) {
          least = std::min(least, m.ext);
          if (families.empty() || families.back() != m.family) families.push_back(m.family);
        }
        ++report.ext_histogram[least];
        for (FamilyId f : families) ++report.family_histogram[f];
        if (families.size() > 1) report.overlaps.emplace_back(d, families);
      }
      report.classes.push_back({d, std::move(matches)});
    }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

unsigned jobs_from_environment(unsigned fallback) {
  const char* raw = std::getenv("FOLCLASS_JOBS");
  if (!raw || !*raw) return fallback;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 4 || std::stoul(text) == 0)
    throw ParseError("FOLCLASS_JOBS must be a positive integer", text, 0);
  return static_cast<unsigned>(std::stoul(text));
}

}  // namespace folclass
