#include "blocklab/weights.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "blocklab/blocks.hpp"
#include "blocklab/errors.hpp"
#include "blocklab/invariants.hpp"

namespace blocklab {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::vector<Subgroup> all_subgroups(const GroupTable& g) {
  std::set<Subgroup> seen{trivial_subgroup()};
  std::vector<Subgroup> todo{trivial_subgroup()};
  while (!todo.empty()) {
    Subgroup h = todo.back();
    todo.pop_back();
    for (Index e = 0; e < g.order(); ++e) {
      if (h.contains(e)) continue;
      std::vector<Index> gens = h.generators;
      gens.push_back(e);
      Subgroup k = generate(g, gens);
      if (seen.insert(k).second) todo.push_back(k);
    }
  }
  return {seen.begin(), seen.end()};
}

void extend_chains(const std::vector<Subgroup>& twos, std::vector<Subgroup>& cur,
                   std::vector<std::vector<Subgroup>>& out) {
  out.push_back(cur);
  for (const auto& s : twos)
    if (s.order() > cur.back().order() && s.contains(cur.back())) {
      cur.push_back(s);
      extend_chains(twos, cur, out);
      cur.pop_back();
    }
}

std::vector<Subgroup> conjugate_chain(const GroupTable& g, const std::vector<Subgroup>& chain, Index by) {
  std::vector<Subgroup> r;
  for (const auto& s : chain) r.push_back(conjugate(g, s, by));
  return r;
}

}  // namespace

WeightContext::WeightContext(const FusionSystem& fs, const Subgroup& q) : q_(q) {
  GroupPtr aut = aut_f(fs, {q});
  Subgroup inn = inner_automorphisms(fs, q, *aut);
  outer_ = quotient_table(aut, inn);

  // least representative of each coset, in quotient_table's order
  std::vector<Index> reps;
  std::vector<bool> seen(aut->order(), false);
  for (Index a = 0; a < aut->order(); ++a) {
    if (seen[a]) continue;
    reps.push_back(a);
    for (Index h : inn.elements) seen[aut->mul(a, h)] = true;
  }

  GroupPtr qt = subgroup_table(fs.group, q);
  table_ = dixon_table(qt);
  const std::size_t nq = q.order();
  const int vq = nu2(static_cast<long long>(nq));
  for (std::size_t c = 0; c < table_.size(); ++c) defects_.push_back(vq - nu2(table_.degree(c)));

  for (Index r : reps) {
    const auto& perm = aut->coords(r);
    std::vector<Index> inv(nq);
    for (std::size_t i = 0; i < nq; ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<Index>(i);
    std::vector<std::size_t> act(table_.size());
    for (std::size_t c = 0; c < table_.size(); ++c) {
      std::vector<Cyclotomic> twisted(table_.classes.size());
      for (std::size_t k = 0; k < table_.classes.size(); ++k)
        twisted[k] = table_.chars[c][table_.class_of[inv[table_.classes[k].representative]]];
      auto it = std::find(table_.chars.begin(), table_.chars.end(), twisted);
      if (it == table_.chars.end()) throw InternalError("WeightContext: twisted character is not irreducible");
      act[c] = static_cast<std::size_t>(it - table_.chars.begin());
    }
    action_.push_back(std::move(act));
  }

  std::vector<Subgroup> twos;
  for (auto& s : all_subgroups(*outer_))
    if (is_power_of_two(s.order())) twos.push_back(s);
  std::vector<std::vector<Subgroup>> every;
  std::vector<Subgroup> cur{trivial_subgroup()};
  extend_chains(twos, cur, every);
  std::set<std::vector<Subgroup>> done;
  for (const auto& ch : every) {
    if (done.count(ch)) continue;
    for (Index g = 0; g < outer_->order(); ++g) done.insert(conjugate_chain(*outer_, ch, g));
    chains_.push_back(ch);
  }
}

std::size_t WeightContext::z_count(const Subgroup& s) const {
  auto it = z_cache_.find(s.elements);
  if (it != z_cache_.end()) return it->second;
  std::size_t z = defect_zero_count(dixon_table(subgroup_table(outer_, s)));
  z_cache_[s.elements] = z;
  return z;
}

WeightCell WeightContext::cell(int d) const {
  WeightCell out;
  out.d = d;
  for (const auto& ch : chains_) {
    WeightChain wc;
    wc.chain = ch;
    std::vector<Index> stab;
    for (Index g = 0; g < outer_->order(); ++g)
      if (conjugate_chain(*outer_, ch, g) == ch) stab.push_back(g);
    wc.stabilizer_order = stab.size();

    std::vector<bool> done(table_.size(), false);
    long long sum = 0;
    for (std::size_t mu = 0; mu < table_.size(); ++mu) {
      if (done[mu] || defects_[mu] != d) continue;
      std::set<std::size_t> orbit;
      std::vector<Index> fix;
      for (Index g : stab) {
        std::size_t img = action_[g][mu];
        orbit.insert(img);
        if (img == mu) fix.push_back(g);
      }
      for (std::size_t o : orbit) done[o] = true;
      Subgroup i_sigma_mu = generate(*outer_, fix);
      wc.orbit_sizes.push_back(orbit.size());
      wc.orbit_stabilizer_orders.push_back(i_sigma_mu.order());
      sum += static_cast<long long>(z_count(i_sigma_mu));
    }
    const bool odd = (ch.size() - 1) % 2 == 1;
    wc.contribution = odd ? -sum : sum;
    out.w += wc.contribution;
    out.chains.push_back(std::move(wc));
  }
  return out;
}

long long weight_sum(const FusionSystem& fs, const Subgroup& q, int d) { return WeightContext(fs, q).cell(d).w; }

std::string subgroup_label(const FusionSystem& fs, const Subgroup& q) {
  if (q.order() == fs.group->order()) return "D";
  auto in_class = [&](const Subgroup& rep) {
    for (const auto& c : f_conjugates(fs, rep))
      if (c == q) return true;
    return false;
  };
  if (in_class(fs.q1)) return "Q1";
  if (in_class(fs.q2)) return "Q2";
  return "Q" + std::to_string(q.order());
}

std::vector<long long> defect_counts(const GroupParams& params, FusionCase c) {
  BlockInvariants inv = theorem_main(params, c);
  const int top = params.n + params.m - 1;
  std::vector<long long> out(static_cast<std::size_t>(top + 1), 0);
  for (const auto& [h, cnt] : inv.k_height) out[static_cast<std::size_t>(top - h)] += cnt;
  return out;
}

bool WeightLedger::pass() const {
  for (std::size_t d = 0; d < target.size(); ++d) {
    long long s = 0;
    for (const auto& row : w) s += row[d];
    if (s != target[d]) return false;
  }
  return true;
}

std::string WeightLedger::to_string() const {
  std::ostringstream os;
  os << "d";
  for (const auto& l : labels) os << '\t' << l;
  os << "\tsum\tk^d(B)\tstatus\n";
  for (std::size_t d = 0; d < target.size(); ++d) {
    long long s = 0;
    os << d;
    for (const auto& row : w) {
      os << '\t' << row[d];
      s += row[d];
    }
    os << '\t' << s << '\t' << target[d] << '\t' << (s == target[d] ? "PASS" : "FAIL") << '\n';
  }
  return os.str();
}

WeightLedger owc_check(const GroupParams& params, FusionCase c, std::size_t alpha_index) {
  FusionSystem fs = build_fusion(params, c, alpha_index);
  WeightLedger led{params, c, {}, {}, defect_counts(params, c)};
  for (const auto& cls : centric_radical_classes(fs)) {
    const Subgroup& q = cls.front();
    WeightContext ctx(fs, q);
    std::vector<long long> row(led.target.size(), 0);
    for (std::size_t d = 0; d < row.size(); ++d) row[d] = ctx.cell(static_cast<int>(d)).w;
    led.labels.push_back(subgroup_label(fs, q));
    led.w.push_back(std::move(row));
  }
  return led;
}

}  // namespace blocklab
