#include "blocklab/invariants.hpp"

#include <sstream>
#include <stdexcept>

#include "blocklab/blocks.hpp"
#include "blocklab/chartab.hpp"

namespace blocklab {

std::string BlockInvariants::to_string() const {
  std::ostringstream out;
  out << "k=" << k << " k0=" << k0 << " k1=" << k1;
  if (separate_kn2) out << " k_{n-2}=" << kn2;
  out << " l=" << l << " e=" << e;
  return out.str();
}

BlockInvariants theorem_formula(int n, int m, FusionCase c) {
  const long long h = 1LL << (m - 1);
  const long long q = 1LL << (n - 2);
  BlockInvariants inv;
  inv.k0 = 4 * h;
  inv.k1 = h * (q - 1);
  switch (c) {
    case FusionCase::aa:
      inv.kn2 = 2 * h;
      inv.l = 3;
      break;
    case FusionCase::ab:
      inv.kn2 = h;
      inv.l = 2;
      break;
    case FusionCase::bb:
      inv.kn2 = 0;
      inv.l = 1;
      break;
  }
  inv.k = inv.k0 + inv.k1 + inv.kn2;
  if (n == 3) {
    // heights 1 and n-2 coincide
    inv.k1 += inv.kn2;
    inv.kn2 = 0;
    inv.separate_kn2 = false;
  } else {
    inv.separate_kn2 = c != FusionCase::bb;
  }
  inv.e = (c == FusionCase::aa && n == 3) ? 3 : 1;
  inv.k_height[0] = inv.k0;
  if (inv.k1) inv.k_height[1] = inv.k1;
  if (inv.kn2) inv.k_height[n - 2] = inv.kn2;
  return inv;
}

BlockInvariants theorem_main(const GroupParams& params, FusionCase c) {
  if (!case_valid(c, params.n))
    throw std::invalid_argument("case " + to_string(c) + " needs n >= 4 (got n = " + std::to_string(params.n) + ")");
  return theorem_formula(params.n, params.m, c);
}

SubsectionSum subsection_sum(const GroupParams& params, FusionCase c) {
  BlockInvariants inv = theorem_main(params, c);
  FusionSystem fs = build_fusion(params, c);
  SubsectionSum s;
  s.k_minus_l = inv.k - inv.l;
  for (const auto& sub : subsection_reps(fs, inv.l)) {
    ++s.subsections;
    if (sub.u != fs.group->identity()) s.sum_l += sub.l;
  }
  return s;
}

bool subsection_sum_check(const GroupParams& params, FusionCase c) { return subsection_sum(params, c).ok(); }

bool Report::pass() const {
  for (const auto& l : lines)
    if (!l.pass) return false;
  return true;
}

void Report::add(std::string name, bool ok, std::string detail) {
  lines.push_back(CheckLine{std::move(name), ok, std::move(detail)});
}

std::string Report::to_string() const {
  std::ostringstream out;
  for (const auto& l : lines) out << (l.pass ? "PASS " : "FAIL ") << l.name << ": " << l.detail << '\n';
  return out.str();
}

Report conjecture_suite(const BlockInvariants& inv, const GroupParams& params) {
  Report r;
  auto d = make_group(params);
  const long long order = static_cast<long long>(d->order());
  const long long abel = order / static_cast<long long>(derived_subgroup(*d).order());
  auto num = [](long long a, const char* op, long long b) {
    return std::to_string(a) + " " + op + " " + std::to_string(b);
  };
  r.add("Brauer k(B)", inv.k <= order, num(inv.k, "<=", order));
  r.add("Olsson k0(B)", inv.k0 <= abel, num(inv.k0, "<=", abel));
  bool same = true;
  for (auto c : valid_cases(params.n)) same = same && theorem_main(params, c).k0 == inv.k0;
  const long long local = theorem_main(params, FusionCase::bb).k0;
  r.add("Alperin-McKay k0", same && inv.k0 == local, num(inv.k0, "==", local));
  r.add("height zero", inv.k0 < inv.k, num(inv.k0, "<", inv.k));
  long long sum = 0;
  for (const auto& [h, c] : inv.k_height) sum += c;
  r.add("k = sum k_h", sum == inv.k, num(sum, "==", inv.k));
  return r;
}

long long alperin_weight_count(const FusionSystem& fs) {
  long long w = 0;
  for (const auto& cls : centric_radical_classes(fs)) w += static_cast<long long>(defect_zero_count(dixon_table(out_f(fs, cls.front()))));
  return w;
}

Report quaternion_formula_check(int n) {
  // invariants of blocks with quaternion defect group Q_{2^n}
  struct Known {
    FusionCase c;
    long long k, k0, k1, kn2, l;
  };
  const long long q = 1LL << (n - 2);
  std::vector<Known> known = {{FusionCase::aa, q + 5, 4, q - 1, 2, 3},
                              {FusionCase::ab, q + 4, 4, q - 1, 1, 2},
                              {FusionCase::bb, q + 3, 4, q - 1, 0, 1}};
  Report r;
  for (const auto& kn : known) {
    if (!case_valid(kn.c, n)) continue;
    BlockInvariants f = theorem_formula(n, 1, kn.c);
    // for n = 3 heights 1 and n-2 merge on both sides
    long long want_k1 = n == 3 ? kn.k1 + kn.kn2 : kn.k1;
    long long want_kn2 = n == 3 ? 0 : kn.kn2;
    bool ok = f.k == kn.k && f.k0 == kn.k0 && f.k1 == want_k1 && f.kn2 == want_kn2 && f.l == kn.l;
    r.add("m=1 " + to_string(kn.c) + " n=" + std::to_string(n), ok, f.to_string());
  }
  return r;
}

}  // namespace blocklab
