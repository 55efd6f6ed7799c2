// SPDX-License-Identifier: Apache-2.0
#include "intprop/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace intprop {

const char* approach_str(Approach a) {
  switch (a) {
    case Approach::A1a: return "1a";
    case Approach::A1b: return "1b";
    case Approach::A2a: return "2a";
    case Approach::A2b: return "2b";
    case Approach::A3a: return "3a";
    case Approach::A3b: return "3b";
    case Approach::A3c: return "3c";
  }
  return "?";
}

std::optional<Approach> approach_from_string(const std::string& s) {
  if (s == "1a") return Approach::A1a;
  if (s == "1b") return Approach::A1b;
  if (s == "2a") return Approach::A2a;
  if (s == "2b") return Approach::A2b;
  if (s == "3a") return Approach::A3a;
  if (s == "3b") return Approach::A3b;
  if (s == "3c") return Approach::A3c;
  return std::nullopt;
}

int CompiledCsp::counted_drfs() const {
  int n = 0;
  for (const auto& d : drfs) n += d.counted ? 1 : 0;
  return n;
}

IntInterval aux_domain(const AuxDef& def, const DomainStore& store,
                       OpCounters& ops) {
  switch (def.kind) {
    case AuxDef::Kind::Product:
      return eval_power_product(store, def.pp, ops);
    case AuxDef::Kind::Mult:
      return mul_hull(store[static_cast<size_t>(def.a)],
                      store[static_cast<size_t>(def.b)], ops);
    case AuxDef::Kind::Pow:
      return pow_hull(store[static_cast<size_t>(def.base)], def.n, ops);
  }
  return IntInterval::empty();
}

namespace {

PowerProduct single_var_pp(VarId v) {
  PowerProduct pp;
  pp.powers.emplace_back(v, 1);
  return pp;
}

class Compiler {
 public:
  Compiler(const CspModel& model, Approach approach, bool with_objective)
      : model_(model), approach_(approach), with_objective_(with_objective) {}

  CompiledCsp run() {
    for (const auto& v : model_.vars) {
      out_.var_names.push_back(v.name);
      out_.initial.push_back(v.domain);
      used_names_.insert(v.name);
    }
    out_.original_vars = static_cast<int>(model_.vars.size());

    std::vector<PolyConstraint> users;
    for (const auto& c : model_.constraints) {
      PolyConstraint p = normalize(c);
      if (p.is_ground()) {
        if (!p.ground_truth()) out_.ground_false = true;
        continue;
      }
      users.push_back(std::move(p));
    }
    if (with_objective_) {
      assert(model_.objective);
      out_.objective_var = fresh_var("_obj", IntInterval::all());
      ArithConstraint def{*model_.objective, RelOp::Eq,
                          Expr::variable(out_.objective_var)};
      users.push_back(normalize(def));
    }

    rewrite(users);
    for (auto& p : users)
      out_.polys.push_back(CompiledConstraint{std::move(p), true, -1});
    emit_aux_definitions();
    // objective domain from its defining constraint is found by propagation
    build_drfs();
    build_schedule();
    return std::move(out_);
  }

 private:
  VarId fresh_var(std::string base, IntInterval domain) {
    std::string name = base;
    int suffix = 1;
    while (used_names_.count(name)) name = base + std::to_string(suffix++);
    used_names_.insert(name);
    out_.var_names.push_back(name);
    out_.initial.push_back(std::move(domain));
    return static_cast<VarId>(out_.var_names.size() - 1);
  }

  // --- approach rewriting ---------------------------------------------

  void rewrite(std::vector<PolyConstraint>& users) {
    switch (approach_) {
      case Approach::A1a:
      case Approach::A1b:
        return;
      case Approach::A2a:
        for (auto& p : users) {
          if (p.op == RelOp::Ne) continue;
          for (auto& m : p.monomials)
            if (m.degree() >= 2) m.pp = single_var_pp(product_aux(m.pp));
          resort(p);
        }
        return;
      case Approach::A2b:
        rewrite_2b(users);
        return;
      default:
        for (auto& p : users) {
          if (p.op == RelOp::Ne) continue;
          lower_constraint(p);
          resort(p);
        }
        return;
    }
  }

  static void resort(PolyConstraint& p) {
    std::sort(p.monomials.begin(), p.monomials.end(),
              [](const Monomial& x, const Monomial& y) {
                return pp_precedes(x.pp, y.pp);
              });
  }

  // Auxiliary variable equated with a power product (approach 2); shared
  // across constraints.
  VarId product_aux(const PowerProduct& pp) {
    auto it = product_aux_.find(pp);
    if (it != product_aux_.end()) return it->second;
    IntInterval dom = eval_power_product(out_.initial, pp, out_.compile_ops);
    VarId v = fresh_var("_t" + std::to_string(out_.aux.size() + 1),
                        std::move(dom));
    AuxDef def;
    def.var = v;
    def.kind = AuxDef::Kind::Product;
    def.pp = pp;
    out_.aux.push_back(def);
    product_aux_.emplace(pp, v);
    return v;
  }

  // Stop introducing auxiliary variables as soon as no constraint has
  // duplicate variable occurrences: greedily take the power product with
  // the highest duplicate-occurrence score.
  void rewrite_2b(std::vector<PolyConstraint>& users) {
    for (;;) {
      std::map<PowerProduct, long> score;
      for (const auto& p : users) {
        if (p.op == RelOp::Ne) continue;
        auto dups = duplicate_occurrence_report(p);
        if (dups.empty()) continue;
        std::map<VarId, long> occ;
        for (const auto& m : p.monomials)
          for (const auto& [v, n] : m.pp.powers) ++occ[v];
        for (const auto& m : p.monomials) {
          if (m.degree() < 2) continue;
          long s = 0;
          for (const auto& [v, n] : m.pp.powers)
            if (std::binary_search(dups.begin(), dups.end(), v)) s += occ[v];
          if (s > 0) score[m.pp] += s;
        }
      }
      if (score.empty()) break;
      const PowerProduct* best = nullptr;
      long best_score = 0;
      for (const auto& [pp, s] : score) {
        if (!best || s > best_score ||
            (s == best_score && pp_precedes(pp, *best))) {
          best = &pp;
          best_score = s;
        }
      }
      PowerProduct chosen = *best;
      VarId u = product_aux(chosen);
      for (auto& p : users) {
        if (p.op == RelOp::Ne) continue;
        bool hit = false;
        for (auto& m : p.monomials)
          if (m.pp == chosen) {
            m.pp = single_var_pp(u);
            hit = true;
          }
        if (hit) resort(p);
      }
    }
  }

  // --- atomic lowering (approach 3) -------------------------------------

  VarId mult_aux(VarId a, VarId b) {
    auto key = std::minmax(a, b);
    auto it = mult_aux_.find(key);
    if (it != mult_aux_.end()) return it->second;
    IntInterval dom = mul_hull(out_.initial[static_cast<size_t>(a)],
                               out_.initial[static_cast<size_t>(b)],
                               out_.compile_ops);
    VarId v = fresh_var("_t" + std::to_string(out_.aux.size() + 1),
                        std::move(dom));
    AuxDef def;
    def.var = v;
    def.kind = AuxDef::Kind::Mult;
    def.a = key.first;
    def.b = key.second;
    out_.aux.push_back(def);
    mult_aux_.emplace(key, v);
    return v;
  }

  VarId pow_atom_aux(VarId base, unsigned long n) {
    auto key = std::make_pair(base, n);
    auto it = pow_aux_.find(key);
    if (it != pow_aux_.end()) return it->second;
    IntInterval dom = pow_hull(out_.initial[static_cast<size_t>(base)], n,
                               out_.compile_ops);
    VarId v = fresh_var("_t" + std::to_string(out_.aux.size() + 1),
                        std::move(dom));
    AuxDef def;
    def.var = v;
    def.kind = AuxDef::Kind::Pow;
    def.base = base;
    def.n = n;
    out_.aux.push_back(def);
    pow_aux_.emplace(key, v);
    return v;
  }

  // v^n as a variable; powers decompose by halving so that squares are
  // shared, with the squaring step atomic where the approach allows it.
  VarId lower_power(VarId v, unsigned long n) {
    if (n == 1) return v;
    auto key = std::make_pair(v, n);
    auto it = power_var_.find(key);
    if (it != power_var_.end()) return it->second;
    VarId result;
    if (approach_ == Approach::A3c) {
      result = pow_atom_aux(v, n);
    } else if (n == 2) {
      result = approach_ == Approach::A3b ? pow_atom_aux(v, 2)
                                          : mult_aux(v, v);
    } else if (n % 2 == 0) {
      VarId h = lower_power(v, n / 2);
      result = approach_ == Approach::A3b ? pow_atom_aux(h, 2)
                                          : mult_aux(h, h);
    } else {
      VarId h = lower_power(v, n - 1);
      result = mult_aux(h, v);
    }
    power_var_.emplace(key, result);
    return result;
  }

  // Lower every non-linear monomial of one constraint to a chain of atomic
  // constraints. Subproducts occurring in several monomials are extracted
  // first (highest occurrence count, earliest on ties) so that a shared
  // factor pair becomes one shared variable; remaining products fold over
  // the two smallest factors, reusing any pair that already has a variable.
  void lower_constraint(PolyConstraint& p) {
    std::vector<int> idx;
    std::vector<std::vector<VarId>> lists;
    for (int i = 0; i < static_cast<int>(p.monomials.size()); ++i) {
      Monomial& m = p.monomials[static_cast<size_t>(i)];
      if (m.degree() < 2) continue;
      std::vector<VarId> factors;
      for (const auto& [v, n] : m.pp.powers)
        factors.push_back(lower_power(v, n));
      std::sort(factors.begin(), factors.end());
      idx.push_back(i);
      lists.push_back(std::move(factors));
    }
    if (idx.empty()) return;

    auto replace_pair = [](std::vector<VarId>& fs, VarId a, VarId b,
                           VarId combined) {
      fs.erase(std::find(fs.begin(), fs.end(), b));
      fs.erase(std::find(fs.begin(), fs.end(), a));
      fs.insert(std::lower_bound(fs.begin(), fs.end(), combined), combined);
    };

    // extract factor pairs shared between monomials
    for (;;) {
      std::map<std::pair<VarId, VarId>, int> freq;
      for (const auto& fs : lists)
        for (size_t i = 0; i < fs.size(); ++i)
          for (size_t j = i + 1; j < fs.size(); ++j)
            ++freq[{fs[i], fs[j]}];
      int best = 0;
      for (const auto& [pair, f] : freq) best = std::max(best, f);
      if (best < 2) break;
      std::pair<VarId, VarId> chosen{-1, -1};
      for (const auto& fs : lists) {
        for (size_t i = 0; i < fs.size() && chosen.first < 0; ++i)
          for (size_t j = i + 1; j < fs.size(); ++j)
            if (freq[{fs[i], fs[j]}] == best) {
              chosen = {fs[i], fs[j]};
              break;
            }
        if (chosen.first >= 0) break;
      }
      VarId w = mult_aux(chosen.first, chosen.second);
      for (auto& fs : lists)
        if (std::find(fs.begin(), fs.end(), chosen.first) != fs.end() &&
            std::find(fs.begin(), fs.end(), chosen.second) != fs.end())
          replace_pair(fs, chosen.first, chosen.second, w);
    }

    for (size_t k = 0; k < lists.size(); ++k) {
      std::vector<VarId>& fs = lists[k];
      while (fs.size() > 1) {
        size_t bi = 0, bj = 1;
        for (size_t i = 0; i < fs.size(); ++i) {
          bool found = false;
          for (size_t j = i + 1; j < fs.size(); ++j)
            if (mult_aux_.count(std::minmax(fs[i], fs[j]))) {
              bi = i;
              bj = j;
              found = true;
              break;
            }
          if (found) break;
        }
        VarId w = mult_aux(fs[bi], fs[bj]);
        replace_pair(fs, fs[bi], fs[bj], w);
      }
      p.monomials[static_cast<size_t>(idx[k])].pp = single_var_pp(fs.front());
    }
  }

  // --- aux definition constraints ---------------------------------------

  void emit_aux_definitions() {
    for (int i = 0; i < static_cast<int>(out_.aux.size()); ++i) {
      const AuxDef& d = out_.aux[i];
      switch (d.kind) {
        case AuxDef::Kind::Product: {
          PolyConstraint p;
          p.op = RelOp::Eq;
          p.rhs = 0;
          p.monomials.push_back(Monomial{BigInt(1), d.pp});
          p.monomials.push_back(Monomial{BigInt(-1), single_var_pp(d.var)});
          resort(p);
          out_.polys.push_back(CompiledConstraint{std::move(p), false, i});
          break;
        }
        case AuxDef::Kind::Mult:
          out_.mults.push_back(AtomicMult{d.a, d.b, d.var});
          break;
        case AuxDef::Kind::Pow:
          out_.pows.push_back(AtomicPow{d.var, d.base, d.n});
          break;
      }
    }
  }

  // --- DRF construction --------------------------------------------------

  bool opt_eligible(const PolyConstraint& c, int l, int p) const {
    if (approach_ != Approach::A1b) return false;
    if (c.is_linear()) return false;
    const Monomial& m = c.monomials[static_cast<size_t>(l)];
    for (int i = 0; i < static_cast<int>(m.pp.powers.size()); ++i) {
      if (i == p) continue;
      const IntInterval& dom =
          out_.initial[static_cast<size_t>(m.pp.powers[i].first)];
      if (dom.is_empty() || dom.contains_zero()) return false;
    }
    return true;
  }

  std::shared_ptr<const OptRuleData> build_opt_data(const PolyConstraint& c,
                                                    int l, int p) const {
    const Monomial& sel = c.monomials[static_cast<size_t>(l)];
    auto data = std::make_shared<OptRuleData>();
    data->target = sel.pp.powers[static_cast<size_t>(p)].first;
    data->root_n = sel.pp.powers[static_cast<size_t>(p)].second;
    Monomial s{sel.coeff, {}};
    for (int i = 0; i < static_cast<int>(sel.pp.powers.size()); ++i)
      if (i != p) s.pp.powers.push_back(sel.pp.powers[i]);
    data->s = s;

    // m0'/s0' = [b/s]; mi'/si' = -[mi/s]
    std::vector<std::pair<Monomial, Monomial>> fractions;
    fractions.push_back(simplify_fraction(Monomial{c.rhs, {}}, s));
    for (int i = 0; i < static_cast<int>(c.monomials.size()); ++i) {
      if (i == l) continue;
      auto [num, den] = simplify_fraction(c.monomials[i], s);
      num.coeff = -num.coeff;
      fractions.emplace_back(num, den);
    }
    for (auto& [num, den] : fractions) {
      if (num.coeff == 0) continue;
      auto it = std::find_if(
          data->groups.begin(), data->groups.end(),
          [&](const OptFractionGroup& g) {
            return g.den.coeff == den.coeff && g.den.pp == den.pp;
          });
      if (it == data->groups.end()) {
        data->groups.push_back(OptFractionGroup{den, {num}});
      } else {
        it->num.push_back(num);
      }
    }
    return data;
  }

  void add_drf(DrfInstance d) { out_.drfs.push_back(std::move(d)); }

  void build_drfs() {
    for (int ci = 0; ci < static_cast<int>(out_.polys.size()); ++ci) {
      const PolyConstraint& c = out_.polys[static_cast<size_t>(ci)].poly;
      std::vector<VarId> vars = c.variables();
      if (c.op == RelOp::Ne) {
        for (VarId v : vars) {
          DrfInstance d;
          d.kind = RuleKind::Diseq;
          d.constraint = ci;
          d.target = v;
          d.depends_on = vars;
          add_drf(std::move(d));
        }
        continue;
      }
      if (c.is_linear()) {
        for (int l = 0; l < static_cast<int>(c.monomials.size()); ++l) {
          DrfInstance d;
          d.kind = c.op == RelOp::Eq ? RuleKind::LinearEq
                                     : RuleKind::LinearIneq;
          d.constraint = ci;
          d.target = c.monomials[static_cast<size_t>(l)].pp.powers[0].first;
          d.monomial = l;
          d.depends_on = vars;
          add_drf(std::move(d));
        }
        continue;
      }
      for (int l = 0; l < static_cast<int>(c.monomials.size()); ++l) {
        const Monomial& m = c.monomials[static_cast<size_t>(l)];
        for (int p = 0; p < static_cast<int>(m.pp.powers.size()); ++p) {
          DrfInstance d;
          d.constraint = ci;
          d.target = m.pp.powers[static_cast<size_t>(p)].first;
          d.monomial = l;
          d.position = p;
          d.depends_on = vars;
          if (opt_eligible(c, l, p)) {
            d.kind = c.op == RelOp::Eq ? RuleKind::PolyEqOpt
                                       : RuleKind::PolyIneqOpt;
            d.opt = build_opt_data(c, l, p);
          } else {
            d.kind = c.op == RelOp::Eq ? RuleKind::PolyEq : RuleKind::PolyIneq;
          }
          add_drf(std::move(d));
        }
      }
    }
    for (int mi = 0; mi < static_cast<int>(out_.mults.size()); ++mi) {
      const AtomicMult& m = out_.mults[static_cast<size_t>(mi)];
      std::vector<VarId> vars{m.x, m.y, m.z};
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      DrfInstance d1;
      d1.kind = RuleKind::Mult1;
      d1.constraint = mi;
      d1.target = m.z;
      d1.depends_on = vars;
      add_drf(std::move(d1));
      DrfInstance d2;
      d2.kind = RuleKind::Mult2;
      d2.constraint = mi;
      d2.target = m.x;
      d2.depends_on = vars;
      add_drf(std::move(d2));
      if (m.y != m.x) {
        DrfInstance d3;
        d3.kind = RuleKind::Mult3;
        d3.constraint = mi;
        d3.target = m.y;
        d3.depends_on = vars;
        add_drf(std::move(d3));
      }
    }
    for (int pi = 0; pi < static_cast<int>(out_.pows.size()); ++pi) {
      const AtomicPow& p = out_.pows[static_cast<size_t>(pi)];
      std::vector<VarId> vars{p.x, p.y};
      std::sort(vars.begin(), vars.end());
      DrfInstance de;
      de.kind = RuleKind::Exponentiation;
      de.constraint = pi;
      de.target = p.x;
      de.depends_on = vars;
      add_drf(std::move(de));
      DrfInstance dr;
      dr.kind = RuleKind::RootExtraction;
      dr.constraint = pi;
      dr.target = p.y;
      dr.depends_on = vars;
      add_drf(std::move(dr));
    }
    if (with_objective_) {
      DrfInstance d;
      d.kind = RuleKind::ObjBound;
      d.constraint = -1;
      d.target = out_.objective_var;
      d.depends_on = {out_.objective_var};
      d.counted = false;
      out_.bound_drf = static_cast<int>(out_.drfs.size());
      add_drf(std::move(d));
    }
  }

  // --- hierarchical schedule ----------------------------------------------
  // Around every user-constraint DRF: forward-evaluation DRFs of the aux
  // variables it reads (bottom-up), the DRF itself, then the backward
  // propagation of the aux it writes (top-down).

  // variables backed by an AuxDef (the objective variable is not)
  int aux_index_of(VarId v) const {
    for (int i = 0; i < static_cast<int>(out_.aux.size()); ++i)
      if (out_.aux[static_cast<size_t>(i)].var == v) return i;
    return -1;
  }
  bool is_aux(VarId v) const { return aux_index_of(v) >= 0; }

  void build_schedule() {
    const int n = static_cast<int>(out_.drfs.size());
    std::map<VarId, int> fwd_of;
    std::map<VarId, std::vector<int>> bwd_of;
    std::vector<bool> is_user_drf(static_cast<size_t>(n), false);

    for (int i = 0; i < n; ++i) {
      const DrfInstance& d = out_.drfs[static_cast<size_t>(i)];
      if (d.kind == RuleKind::ObjBound) continue;
      bool aux_def = false;
      VarId defined = -1;
      switch (d.kind) {
        case RuleKind::Mult1:
        case RuleKind::Mult2:
        case RuleKind::Mult3:
          aux_def = true;
          defined = out_.mults[static_cast<size_t>(d.constraint)].z;
          break;
        case RuleKind::Exponentiation:
        case RuleKind::RootExtraction:
          aux_def = true;
          defined = out_.pows[static_cast<size_t>(d.constraint)].x;
          break;
        default: {
          const CompiledConstraint& cc =
              out_.polys[static_cast<size_t>(d.constraint)];
          if (!cc.user) {
            aux_def = true;
            defined = out_.aux[static_cast<size_t>(cc.aux_index)].var;
          }
          break;
        }
      }
      if (!aux_def) {
        is_user_drf[static_cast<size_t>(i)] = true;
        continue;
      }
      if (d.target == defined) {
        fwd_of[defined] = i;
      } else {
        bwd_of[defined].push_back(i);
      }
    }

    auto children = [&](VarId u) {
      std::vector<VarId> kids;
      const AuxDef& def = out_.aux[static_cast<size_t>(aux_index_of(u))];
      switch (def.kind) {
        case AuxDef::Kind::Product:
          for (const auto& [v, e] : def.pp.powers)
            if (is_aux(v)) kids.push_back(v);
          break;
        case AuxDef::Kind::Mult:
          if (is_aux(def.a)) kids.push_back(def.a);
          if (is_aux(def.b) && def.b != def.a) kids.push_back(def.b);
          break;
        case AuxDef::Kind::Pow:
          if (is_aux(def.base)) kids.push_back(def.base);
          break;
      }
      return kids;
    };

    std::vector<int>& sched = out_.schedule;
    auto fwd_chain = [&](auto&& self, VarId u, std::set<VarId>& seen) -> void {
      if (seen.count(u)) return;
      seen.insert(u);
      for (VarId k : children(u)) self(self, k, seen);
      auto it = fwd_of.find(u);
      if (it != fwd_of.end()) sched.push_back(it->second);
    };
    auto bwd_chain = [&](auto&& self, VarId u, std::set<VarId>& seen) -> void {
      if (seen.count(u)) return;
      seen.insert(u);
      auto it = bwd_of.find(u);
      if (it != bwd_of.end())
        for (int i : it->second) sched.push_back(i);
      for (VarId k : children(u)) self(self, k, seen);
    };

    for (int i = 0; i < n; ++i) {
      if (!is_user_drf[static_cast<size_t>(i)]) continue;
      const DrfInstance& d = out_.drfs[static_cast<size_t>(i)];
      std::set<VarId> seen;
      for (VarId v : d.depends_on)
        if (is_aux(v)) fwd_chain(fwd_chain, v, seen);
      sched.push_back(i);
      if (is_aux(d.target)) {
        std::set<VarId> seen_b;
        bwd_chain(bwd_chain, d.target, seen_b);
      }
    }
    if (out_.bound_drf >= 0) sched.push_back(out_.bound_drf);

    // every DRF must be reachable through the schedule
    std::set<int> present(sched.begin(), sched.end());
    assert(static_cast<int>(present.size()) == n);
    (void)present;
  }

  const CspModel& model_;
  Approach approach_;
  bool with_objective_;
  CompiledCsp out_;
  std::set<std::string> used_names_;
  std::map<PowerProduct, VarId> product_aux_;
  std::map<std::pair<VarId, VarId>, VarId> mult_aux_;
  std::map<std::pair<VarId, unsigned long>, VarId> pow_aux_;
  std::map<std::pair<VarId, unsigned long>, VarId> power_var_;
};

}  // namespace

CompiledCsp compile(const CspModel& model, Approach approach,
                    bool with_objective) {
  return Compiler(model, approach, with_objective).run();
}

}  // namespace intprop
