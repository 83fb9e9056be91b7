#include "fairalloc/contiguous.hpp"

#include <algorithm>

namespace fairalloc {

std::vector<BigInt> identical_values(const ValuationProfile& prefix, const char* who) {
  std::vector<BigInt> out;
  out.reserve(prefix.items());
  for (std::size_t g = 1; g <= prefix.items(); ++g) {
    for (int i = 2; i <= prefix.agents(); ++i)
      if (prefix.value(i, g) != prefix.value(1, g))
        throw Unsupported(std::string(who) + " requires identical valuations");
    out.push_back(prefix.value(1, g));
  }
  return out;
}

ContiguousAllocation PropaPointerAllocator::step(const BigInt& item_value) {
  if (item_value < 0) throw Unsupported("propa-pointer requires goods");
  ++t_;
  prefix_sums_.push_back(prefix_sums_.back() + item_value);
  if (item_value > vmax_) vmax_ = item_value;
  const int n = n_;
  // Cross-multiplied constraint: n * v(block) >= v(M_t) - (n-1) * vmax.
  BigInt rhs = prefix_sums_[t_] - BigInt(n - 1) * vmax_;
  std::size_t prev = 0;
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) {
    if (cuts_[i] < prev) cuts_[i] = prev;
    while (cuts_[i] < t_ && BigInt(n) * (prefix_sums_[cuts_[i]] - prefix_sums_[prev]) < rhs)
      ++cuts_[i];
    prev = cuts_[i];
  }
  return ContiguousAllocation{cuts_, t_};
}

Allocation PropaPointerAllocator::on_item(const ValuationProfile& prefix) {
  if (n_ == 0) {
    n_ = prefix.agents();
    cuts_.assign(static_cast<std::size_t>(n_) - 1, 0);
  }
  std::size_t t = prefix.items();
  for (int i = 2; i <= n_; ++i)
    if (prefix.value(i, t) != prefix.value(1, t))
      throw Unsupported("propa-pointer requires identical valuations");
  return induce(step(prefix.value(1, t)));
}

ContiguousAllocation lumpy_tie_step(const IntervalValuationOracle& v, std::size_t t) {
  if (t == 0) throw ContractViolation("lumpy tie needs at least one item");
  std::size_t i = t;
  for (std::size_t j = 1; j <= t; ++j) {
    if (v(0, j) >= v(j, t)) {
      i = j;
      break;
    }
  }
  std::size_t cut = (v(0, i - 1) <= v(i, t)) ? i : i - 1;
  return ContiguousAllocation{{cut}, t};
}

Allocation LumpyTieAllocator::on_item(const ValuationProfile& prefix) {
  if (prefix.agents() != 2) throw Unsupported("lumpy-tie requires exactly 2 agents");
  std::size_t t = prefix.items();
  if (oracle_) {
    last_ = lumpy_tie_step(*oracle_, t);
  } else {
    values_ = identical_values(prefix, "lumpy-tie");
    last_ = lumpy_tie_step(IntervalValuationOracle::additive(values_), t);
  }
  return induce(last_);
}

Leximin2Result leximin2_dp(const std::vector<BigInt>& values, int n) {
  if (n < 1) throw ContractViolation("need at least one agent");
  const std::size_t m = values.size();
  std::vector<BigInt> S{0};
  for (const auto& v : values) S.push_back(S.back() + v);

  LeximinDpTables tab;
  tab.f.assign(static_cast<std::size_t>(n) + 1, {});
  tab.h.assign(static_cast<std::size_t>(n) + 1, {});
  for (int i = 1; i <= n; ++i) {
    tab.f[static_cast<std::size_t>(i)].assign(m + 1, {});
    tab.h[static_cast<std::size_t>(i)].assign(m + 1, {});
  }
  for (std::size_t j = 0; j <= m; ++j) {
    tab.f[1][j] = {j};
    tab.h[1][j] = {S[j]};
  }
  for (int i = 2; i <= n; ++i) {
    auto& fi = tab.f[static_cast<std::size_t>(i)];
    auto& hi = tab.h[static_cast<std::size_t>(i)];
    const auto& fp = tab.f[static_cast<std::size_t>(i) - 1];
    const auto& hp = tab.h[static_cast<std::size_t>(i) - 1];
    for (std::size_t j = 0; j <= m; ++j) {
      bool have = false;
      std::vector<BigInt> best_q;
      std::vector<std::size_t> best_p;
      for (std::size_t k = 0; k <= j; ++k) {
        BigInt block = S[j] - S[k];
        // Q of the candidate: insert v(M_{k,j}) into h[i-1][k] keeping order.
        std::vector<BigInt> q = hp[k];
        q.insert(std::upper_bound(q.begin(), q.end(), block), block);
        std::vector<std::size_t> p = fp[k];
        p.push_back(j);
        bool better;
        if (!have) {
          better = true;
        } else if (q != best_q) {
          better = q > best_q;
        } else {
          better = p < best_p;
        }
        if (better) {
          best_q = std::move(q);
          best_p = std::move(p);
          have = true;
        }
      }
      fi[j] = std::move(best_p);
      hi[j] = std::move(best_q);
    }
  }
  const auto& full = tab.f[static_cast<std::size_t>(n)][m];
  ContiguousAllocation alloc;
  alloc.horizon = m;
  alloc.cuts.assign(full.begin(), full.end() - 1);
  return Leximin2Result{std::move(alloc), std::move(tab)};
}

namespace {

// v(A_i) < v(A_j) - max_{g in A_j} v(g), for identical additive goods.
bool envies_even_up_to_one(const std::vector<BigInt>& values, const std::vector<BigInt>& S,
                           std::size_t i_lo, std::size_t i_hi, std::size_t j_lo, std::size_t j_hi) {
  if (j_lo >= j_hi) return false;  // empty bundle cannot be envied up to one item
  BigInt vi = S[i_hi] - S[i_lo];
  BigInt vj = S[j_hi] - S[j_lo];
  BigInt mx = values[j_lo];
  for (std::size_t g = j_lo + 1; g < j_hi; ++g)
    if (values[g] > mx) mx = values[g];
  return vi < vj - mx;
}

}  // namespace

OfflineEf1Result offline_ef1(const std::vector<BigInt>& values, int n,
                             const std::function<void(const ContiguousAllocation&)>& on_move) {
  const std::size_t m = values.size();
  std::vector<BigInt> S{0};
  for (const auto& v : values) S.push_back(S.back() + v);

  OfflineEf1Result out;
  out.initial = leximin2_dp(values, n).allocation;
  ContiguousAllocation cur = out.initial;

  auto lo = [&](int a) { return a == 1 ? std::size_t{0} : cur.cuts[static_cast<std::size_t>(a) - 2]; };
  auto hi = [&](int a) { return a == n ? m : cur.cuts[static_cast<std::size_t>(a) - 1]; };

  int i = 1;
  BigInt best = S[hi(1)] - S[lo(1)];
  for (int a = 2; a <= n; ++a) {
    BigInt v = S[hi(a)] - S[lo(a)];
    if (v < best) {
      best = v;
      i = a;
    }
  }
  out.fixed_agent = i;

  for (int j = 1; j < i; ++j) {
    while (envies_even_up_to_one(values, S, lo(i), hi(i), lo(j), hi(j))) {
      --cur.cuts[static_cast<std::size_t>(j) - 1];  // rightmost of A_j moves to A_{j+1}
      if (on_move) on_move(cur);
    }
  }
  for (int j = n; j > i; --j) {
    while (envies_even_up_to_one(values, S, lo(i), hi(i), lo(j), hi(j))) {
      ++cur.cuts[static_cast<std::size_t>(j) - 2];  // leftmost of A_j moves to A_{j-1}
      if (on_move) on_move(cur);
    }
  }
  out.allocation = std::move(cur);
  return out;
}

Allocation OnlineEf1Allocator::on_item(const ValuationProfile& prefix) {
  std::size_t t = prefix.items();
  auto vals = identical_values(prefix, "ef1-leximin-online");
  if (vals[t - 1] <= 0)
    throw ContractViolation("ef1-leximin-online requires values in [L, R] with L > 0");
  values_ = std::move(vals);
  auto res = offline_ef1(values_, prefix.agents());
  last_ = res.allocation;
  last_initial_ = res.initial;
  transform_adjustments_ = 0;
  for (std::size_t j = 0; j < last_.cuts.size(); ++j) {
    auto a = last_.cuts[j], b = last_initial_.cuts[j];
    transform_adjustments_ += static_cast<long long>(a > b ? a - b : b - a);
  }
  return induce(last_);
}

SplitterResult offline_propa_splitter(const ValuationProfile& v) {
  const int n = v.agents();
  const std::size_t m = v.items();
  for (int i = 1; i <= n; ++i)
    for (std::size_t g = 1; g <= m; ++g)
      if (v.value(i, g) < 0) throw Unsupported("propa splitter requires goods");

  // Per-agent cross-multiplied threshold: n * v_i(block) >= v_i(M) - (n-1) * v_i^max.
  std::vector<BigInt> rhs(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    rhs[static_cast<std::size_t>(i) - 1] = v.agent_total(i) - BigInt(n - 1) * v.agent_max(i);

  std::vector<bool> active(static_cast<std::size_t>(n), true);
  std::vector<BigInt> block(static_cast<std::size_t>(n), BigInt(0));
  SplitterResult out;
  out.allocation.horizon = m;

  auto try_assign = [&](std::size_t pos) {
    for (;;) {
      int who = 0;
      for (int i = 1; i <= n; ++i) {
        if (active[static_cast<std::size_t>(i) - 1] &&
            BigInt(n) * block[static_cast<std::size_t>(i) - 1] >= rhs[static_cast<std::size_t>(i) - 1]) {
          who = i;
          break;
        }
      }
      if (who == 0) return;
      active[static_cast<std::size_t>(who) - 1] = false;
      out.block_owner.push_back(who);
      if (out.block_owner.size() < static_cast<std::size_t>(n)) out.allocation.cuts.push_back(pos);
      for (auto& b : block) b = 0;
      if (out.block_owner.size() == static_cast<std::size_t>(n)) return;
    }
  };

  for (std::size_t g = 1; g <= m && out.block_owner.size() < static_cast<std::size_t>(n); ++g) {
    for (int i = 1; i <= n; ++i) block[static_cast<std::size_t>(i) - 1] += v.value(i, g);
    try_assign(g);
  }
  // Leftover items (and any never-satisfied agents) close out the line: the
  // guarantee says this never leaves an agent short, but keep the shape valid.
  while (out.block_owner.size() < static_cast<std::size_t>(n)) {
    for (int i = 1; i <= n; ++i) {
      if (active[static_cast<std::size_t>(i) - 1]) {
        active[static_cast<std::size_t>(i) - 1] = false;
        out.block_owner.push_back(i);
        if (out.block_owner.size() < static_cast<std::size_t>(n))
          out.allocation.cuts.push_back(m);
        break;
      }
    }
  }
  out.allocation.validate();
  return out;
}

Allocation OfflineEf1RerunAllocator::on_item(const ValuationProfile& prefix) {
  return induce(offline_ef1(identical_values(prefix, "ef1-offline"), prefix.agents()).allocation);
}

Allocation Leximin2RerunAllocator::on_item(const ValuationProfile& prefix) {
  return induce(leximin2_dp(identical_values(prefix, "leximin2-dp"), prefix.agents()).allocation);
}

}  // namespace fairalloc
