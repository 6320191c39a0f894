#include "fatpoints/sweep.hpp"

#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "fatpoints/acm.hpp"
#include "fatpoints/classify.hpp"
#include "fatpoints/partition.hpp"

namespace fatpoints {

void for_each_normalized_grid(
    int max_rows, int max_cols, int max_mult,
    const std::function<void(const GridScheme&)>& f) {
  for (int r = 1; r <= max_rows; ++r)
    for (int t = 1; t <= max_cols; ++t) {
      std::vector<int> cells(static_cast<std::size_t>(r * t), 0);
      for (;;) {
        // Reject grids with an all-zero row or column instead of
        // renormalizing: every normalized shape is enumerated on its own.
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
          bool any = false;
          for (int j = 0; j < t; ++j)
            any = any || cells[static_cast<std::size_t>(i * t + j)] > 0;
          ok = any;
        }
        for (int j = 0; j < t && ok; ++j) {
          bool any = false;
          for (int i = 0; i < r; ++i)
            any = any || cells[static_cast<std::size_t>(i * t + j)] > 0;
          ok = any;
        }
        if (ok) {
          GridScheme s;
          s.mult.reserve(static_cast<std::size_t>(r));
          for (int i = 0; i < r; ++i)
            s.mult.emplace_back(cells.begin() + i * t,
                                cells.begin() + (i + 1) * t);
          f(s);
        }
        // Odometer step.
        int k = static_cast<int>(cells.size()) - 1;
        while (k >= 0 && cells[static_cast<std::size_t>(k)] == max_mult)
          cells[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
        ++cells[static_cast<std::size_t>(k)];
      }
    }
}

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(idx);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace

bool is_canonical_representative(const GridScheme& s) {
  const int r = s.rows(), t = s.cols();
  static thread_local std::vector<std::vector<std::vector<int>>> cache(16);
  auto perms = [&](int n) -> const std::vector<std::vector<int>>& {
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (slot.empty()) slot = permutations_of(n);
    return slot;
  };
  for (const auto& rp : perms(r))
    for (const auto& cp : perms(t)) {
      // Is the permuted matrix lexicographically smaller?
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < t; ++j) {
          int a = s.at(rp[static_cast<std::size_t>(i)],
                       cp[static_cast<std::size_t>(j)]);
          int b = s.at(i, j);
          if (a != b) {
            if (a < b) return false;
            goto next_perm;
          }
        }
    next_perm:;
    }
  return true;
}

namespace {

// Column/row margins of a difference table must be the conjugates of alpha
// and beta (padded with zeros), and the total must be the degree.
bool delta_margins_ok(const DiffTable& d, const AlphaBeta& ab,
                      long long deg) {
  Partition as = conjugate(ab.alpha), bs = conjugate(ab.beta);
  for (long long j = 0; j < std::max<long long>(d.cols(), ab.m_prime); ++j) {
    long long sum = 0;
    for (long long i = 0; i < d.rows(); ++i) sum += d.at(i, j);
    if (sum != as.part(static_cast<std::size_t>(j))) return false;
  }
  for (long long i = 0; i < std::max<long long>(d.rows(), ab.m); ++i) {
    long long sum = 0;
    for (long long j = 0; j < d.cols(); ++j) sum += d.at(i, j);
    if (sum != bs.part(static_cast<std::size_t>(i))) return false;
  }
  return d.total() == deg;
}

void combinatorial_pass(const GridScheme& s, SweepSummary& sum) {
  sum.schemes++;
  AlphaBeta ab = alpha_beta(s);
  BiDegree corner{ab.m, ab.m_prime};

  if (!majorizes(conjugate(ab.alpha), ab.beta)) sum.majorization_failures++;

  AlphaBeta tr = alpha_beta(transpose(s));
  if (tr.alpha != ab.beta || tr.beta != ab.alpha ||
      tr.alpha_raw != ab.beta_raw || tr.beta_raw != ab.alpha_raw)
    sum.duality_failures++;

  AcmCertificate cert;
  try {
    cert = is_acm(s);
  } catch (const Error&) {
    sum.acm_cross_failures++;
    return;
  }

  if (cert.acm) {
    sum.acm++;
    HilbertTable ht = acm_hilbert(s, corner);
    DiffTable dh = first_difference(ht);
    DiffTable da = acm_delta(s);
    if (!dh.same_function(da) || !is_artinian_staircase(da))
      sum.staircase_failures++;
    if (!delta_margins_ok(dh, ab, degree(s))) sum.delta_sum_failures++;
    HilbertTable rt = resolution_hilbert(resolution(s), corner);
    if (rt.window() != ht.window() ||
        rt.table_border().bc != ht.table_border().bc ||
        rt.table_border().br != ht.table_border().br)
      sum.resolution_failures++;
    if (!check_table_invariants(ht).ok) sum.table_invariant_failures++;
  } else {
    if (!check_table_invariants(combinatorial_hilbert(s, corner)).ok)
      sum.table_invariant_failures++;
  }

  if (s.rows() == 1 || s.cols() == 1) {
    HilbertTable lt = line_hilbert(s, corner);
    bool ok = cert.acm && lt.window() == acm_hilbert(s, corner).window();
    for (int j = 0; ok && j <= ab.m_prime; ++j)
      ok = lt.at(ab.m - 1, j) ==
           hilbert_outside_border(s, ab.m - 1, j).value_or(kUnknown);
    if (!ok) sum.line_failures++;
  }

  try {
    check_section5(s);
  } catch (const Error&) {
    sum.section5_violations++;
  }
}

void oracle_pass(const GridScheme& bare, long long ordinal,
                 const SweepOptions& opt, SweepSummary& sum) {
  AlphaBeta ab = alpha_beta(bare);
  BiDegree corner{ab.m, ab.m_prime};
  bool acm = conjugate(ab.alpha) == ab.beta;
  long long deg = degree(bare);
  Border b = border(bare);
  FieldConfig cfg = FieldConfig::modular(opt.prime);

  for (int draw = 0; draw < 2; ++draw) {
    GridScheme s =
        draw == 0
            ? with_default_coords(bare)
            : with_seeded_coords(bare, splitmix64(opt.seed) +
                                           static_cast<std::uint64_t>(ordinal));
    HilbertTable t = oracle_hilbert_table(s, corner, cfg);
    sum.oracle_tables++;

    bool border_ok = true;
    for (int j = 0; j <= ab.m_prime; ++j)
      border_ok = border_ok &&
                  t.at(ab.m - 1, j) ==
                      (j < ab.m_prime ? b.bc[static_cast<std::size_t>(j)] : deg);
    for (int i = 0; i <= ab.m; ++i)
      border_ok = border_ok &&
                  t.at(i, ab.m_prime - 1) ==
                      (i < ab.m ? b.br[static_cast<std::size_t>(i)] : deg);
    if (!border_ok) sum.border_failures++;

    DiffTable dh = first_difference(t);
    if (is_artinian_staircase(dh) != acm) sum.oracle_acm_disagreements++;
    if (!delta_margins_ok(dh, ab, deg)) sum.delta_sum_failures++;
    if (acm && t.window() != acm_hilbert(bare, corner).window())
      sum.acm_table_failures++;
    if (!check_table_invariants(t).ok) sum.oracle_invariant_failures++;
  }
}

void merge(SweepSummary& into, const SweepSummary& from) {
  into.schemes += from.schemes;
  into.acm += from.acm;
  into.canonical += from.canonical;
  into.majorization_failures += from.majorization_failures;
  into.duality_failures += from.duality_failures;
  into.acm_cross_failures += from.acm_cross_failures;
  into.staircase_failures += from.staircase_failures;
  into.resolution_failures += from.resolution_failures;
  into.line_failures += from.line_failures;
  into.table_invariant_failures += from.table_invariant_failures;
  into.section5_violations += from.section5_violations;
  into.oracle_tables += from.oracle_tables;
  into.border_failures += from.border_failures;
  into.oracle_acm_disagreements += from.oracle_acm_disagreements;
  into.acm_table_failures += from.acm_table_failures;
  into.delta_sum_failures += from.delta_sum_failures;
  into.oracle_invariant_failures += from.oracle_invariant_failures;
}

}  // namespace

SweepSummary run_sweep(const SweepOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  SweepSummary sum;

  std::vector<GridScheme> canonical;
  for_each_normalized_grid(
      opt.max_rows, opt.max_cols, opt.max_mult, [&](const GridScheme& s) {
        combinatorial_pass(s, sum);
        if (opt.oracle_checks && is_canonical_representative(s))
          canonical.push_back(s);
      });
  sum.canonical = static_cast<long long>(canonical.size());

  if (opt.oracle_checks && !canonical.empty()) {
    unsigned hw = std::thread::hardware_concurrency();
    int threads = opt.threads > 0 ? opt.threads : static_cast<int>(hw ? hw : 1);
    threads = std::min<int>(threads, static_cast<int>(canonical.size()));
    if (threads <= 1) {
      for (std::size_t k = 0; k < canonical.size(); ++k)
        oracle_pass(canonical[k], static_cast<long long>(k), opt, sum);
    } else {
      std::vector<SweepSummary> parts(static_cast<std::size_t>(threads));
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
          for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= canonical.size()) break;
            oracle_pass(canonical[k], static_cast<long long>(k), opt,
                        parts[static_cast<std::size_t>(w)]);
          }
        });
      for (auto& th : pool) th.join();
      for (const auto& part : parts) merge(sum, part);
    }
  }

  sum.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return sum;
}

bool SweepSummary::ok() const {
  return majorization_failures == 0 && duality_failures == 0 &&
         acm_cross_failures == 0 && staircase_failures == 0 &&
         resolution_failures == 0 && line_failures == 0 &&
         table_invariant_failures == 0 && section5_violations == 0 &&
         border_failures == 0 && oracle_acm_disagreements == 0 &&
         acm_table_failures == 0 && delta_sum_failures == 0 &&
         oracle_invariant_failures == 0;
}

std::string SweepSummary::to_string() const {
  std::ostringstream os;
  os << "schemes: " << schemes << " (" << acm << " ACM)\n";
  os << "oracle representatives: " << canonical << ", tables: " << oracle_tables
     << "\n";
  os << "failures:";
  long long total = majorization_failures + duality_failures +
                    acm_cross_failures + staircase_failures +
                    resolution_failures + line_failures +
                    table_invariant_failures + section5_violations +
                    border_failures + oracle_acm_disagreements +
                    acm_table_failures + delta_sum_failures +
                    oracle_invariant_failures;
  if (total == 0) {
    os << " none\n";
  } else {
    os << "\n";
    auto line = [&os](const char* name, long long v) {
      if (v) os << "  " << name << ": " << v << "\n";
    };
    line("majorization", majorization_failures);
    line("transpose duality", duality_failures);
    line("acm cross-check", acm_cross_failures);
    line("delta staircase", staircase_failures);
    line("resolution table", resolution_failures);
    line("line formula", line_failures);
    line("table invariants", table_invariant_failures);
    line("section-5 theorems", section5_violations);
    line("oracle border", border_failures);
    line("oracle acm agreement", oracle_acm_disagreements);
    line("oracle acm table", acm_table_failures);
    line("delta margins", delta_sum_failures);
    line("oracle table invariants", oracle_invariant_failures);
  }
  os << "elapsed: " << elapsed_ms << " ms";
  return os.str();
}

}  // namespace fatpoints
