#include "gforge/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include <omp.h>

namespace gforge {

namespace {

constexpr int kUnknown = std::numeric_limits<int>::min();

struct Side {
  GSide::Kind kind;
  int cls = -1;  // class of a constant side
  std::vector<int> atoms;
};

struct Lit {
  Side lhs;
  Rel rel;
  Side rhs;
};

class OrderSearch {
 public:
  // `spacing` is the atom count of the whole theory when t is one of its
  // connected components, so that witnesses stay on the global grid.
  OrderSearch(const GroundTheory& t, std::size_t spacing)
      : t_(t), spacing_(spacing), atom_class_(t.atoms.size(), -1), occ_(t.atoms.size()) {
    for (const auto& c : t.constants) {
      class_const_.push_back(c);
      order_.push_back(static_cast<int>(class_const_.size()) - 1);
    }
    reindex();
    for (std::size_t ci = 0; ci < t.clauses.size(); ++ci) {
      std::vector<Lit> lits;
      for (const auto& l : t.clauses[ci]) {
        lits.push_back({convert(l.lhs), l.rel, convert(l.rhs)});
        for (int a : l.lhs.atoms) add_occ(a, static_cast<int>(ci));
        for (int a : l.rhs.atoms) add_occ(a, static_cast<int>(ci));
      }
      clauses_.push_back(std::move(lits));
    }
  }

  bool run() {
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci)
      if (!settle(static_cast<int>(ci))) return false;
    if (!propagate()) return false;
    return dfs();
  }

  std::uint64_t nodes() const { return nodes_; }

  // Grid valuation of the current (satisfying) class order.
  std::vector<TruthValue> witness() const {
    std::vector<TruthValue> cls_value(class_const_.size());
    const auto n = static_cast<std::int64_t>(spacing_);
    TruthValue lo(0);
    TruthValue hi(0);
    std::int64_t rank = 0;
    for (std::size_t p = 0; p < order_.size(); ++p) {
      int c = order_[p];
      if (class_const_[c]) {
        lo = *class_const_[c];
        rank = 0;
        cls_value[c] = lo;
        continue;
      }
      // The next constant class bounds the gap from above.
      for (std::size_t q = p + 1; q < order_.size(); ++q)
        if (class_const_[order_[q]]) {
          hi = *class_const_[order_[q]];
          break;
        }
      ++rank;
      cls_value[c] = lo + (hi - lo) * TruthValue(rank, n + 1);
    }
    std::vector<TruthValue> v(t_.atoms.size());
    for (std::size_t a = 0; a < v.size(); ++a) {
      int c = atom_class_[a] >= 0 ? atom_class_[a] : order_.front();
      v[a] = cls_value[c];
    }
    return v;
  }

 private:
  Side convert(const GSide& s) {
    Side out{s.kind, -1, s.atoms};
    if (s.kind == GSide::Kind::Const) {
      auto it = std::lower_bound(t_.constants.begin(), t_.constants.end(), s.value);
      out.cls = static_cast<int>(it - t_.constants.begin());
    }
    return out;
  }

  void add_occ(int a, int ci) {
    auto& o = occ_[static_cast<std::size_t>(a)];
    if (o.empty() || o.back() != ci) o.push_back(ci);
  }

  void reindex() {
    pos_.assign(class_const_.size(), -1);
    for (std::size_t p = 0; p < order_.size(); ++p) pos_[order_[p]] = static_cast<int>(p);
  }

  int atom_pos(int a) const {
    int c = atom_class_[static_cast<std::size_t>(a)];
    return c < 0 ? kUnknown : pos_[c];
  }

  int side_pos(const Side& s) const {
    switch (s.kind) {
      case GSide::Kind::Const:
        return pos_[s.cls];
      case GSide::Kind::Atom:
        return atom_pos(s.atoms[0]);
      case GSide::Kind::Inf: {
        // One instance at the bottom fixes the infimum.
        int best = std::numeric_limits<int>::max();
        bool open = false;
        for (int a : s.atoms) {
          int p = atom_pos(a);
          if (p == 0) return 0;
          if (p == kUnknown)
            open = true;
          else
            best = std::min(best, p);
        }
        return open ? kUnknown : best;
      }
      case GSide::Kind::Sup: {
        const int top = static_cast<int>(order_.size()) - 1;
        int best = -1;
        bool open = false;
        for (int a : s.atoms) {
          int p = atom_pos(a);
          if (p == top) return top;
          if (p == kUnknown)
            open = true;
          else
            best = std::max(best, p);
        }
        return open ? kUnknown : best;
      }
    }
    return kUnknown;
  }

  // Class a known side currently sits in.
  int side_class(const Side& s) const { return order_[static_cast<std::size_t>(side_pos(s))]; }

  enum class Truth { False, True, Open };

  // Three-valued literal evaluation. A strict comparison is already false
  // when its left side sits at the top or its right side at the bottom.
  Truth eval(const Lit& l) const {
    const int a = side_pos(l.lhs);
    const int b = side_pos(l.rhs);
    if (a != kUnknown && b != kUnknown) return (l.rel == Rel::Eq ? a == b : a < b) ? Truth::True : Truth::False;
    if (l.rel == Rel::Prec) {
      const int top = static_cast<int>(order_.size()) - 1;
      if (a == top || b == 0) return Truth::False;
    }
    return Truth::Open;
  }

  // Evaluates clause ci: returns false on conflict. When every open literal
  // pins one unknown atom to the same known class, that class is assigned.
  bool settle(int ci) {
    const auto& lits = clauses_[static_cast<std::size_t>(ci)];
    int forced_atom = -1;
    int forced_class = -1;
    bool can_force = true;
    int open_count = 0;
    for (const auto& l : lits) {
      Truth v = eval(l);
      if (v == Truth::True) return true;
      if (v == Truth::False) continue;
      ++open_count;
      if (!can_force) continue;
      if (l.rel != Rel::Eq) {
        can_force = false;
        continue;
      }
      const bool left_open = side_pos(l.lhs) == kUnknown;
      const Side& var = left_open ? l.lhs : l.rhs;
      const Side& known = left_open ? l.rhs : l.lhs;
      if (var.kind != GSide::Kind::Atom || side_pos(known) == kUnknown) {
        can_force = false;
        continue;
      }
      const int cls = side_class(known);
      if (forced_atom < 0) {
        forced_atom = var.atoms[0];
        forced_class = cls;
      } else if (forced_atom != var.atoms[0] || forced_class != cls) {
        can_force = false;
      }
    }
    if (open_count == 0) return false;
    if (can_force) assign(forced_atom, forced_class);
    return true;
  }

  void assign(int a, int cls) {
    atom_class_[static_cast<std::size_t>(a)] = cls;
    trail_.push_back(a);
  }

  bool propagate() {
    while (head_ < trail_.size()) {
      int a = trail_[head_++];
      for (int ci : occ_[static_cast<std::size_t>(a)])
        if (!settle(ci)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      atom_class_[static_cast<std::size_t>(trail_.back())] = -1;
      trail_.pop_back();
    }
    head_ = mark;
  }

  // Returns the open clause with fewest open literals, or -1 if all hold.
  int pick_clause() const {
    int best = -1;
    int best_open = std::numeric_limits<int>::max();
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      int open_count = 0;
      bool sat = false;
      for (const auto& l : clauses_[ci]) {
        Truth v = eval(l);
        if (v == Truth::True) {
          sat = true;
          break;
        }
        if (v == Truth::Open) ++open_count;
      }
      if (!sat && open_count < best_open) {
        best = static_cast<int>(ci);
        best_open = open_count;
      }
    }
    return best;
  }

  int first_unassigned(int ci) const {
    for (const auto& l : clauses_[static_cast<std::size_t>(ci)]) {
      for (int a : l.lhs.atoms)
        if (atom_class_[static_cast<std::size_t>(a)] < 0) return a;
      for (int a : l.rhs.atoms)
        if (atom_class_[static_cast<std::size_t>(a)] < 0) return a;
    }
    return -1;
  }

  bool dfs() {
    ++nodes_;
    int ci = pick_clause();
    if (ci < 0) return true;
    int a = first_unassigned(ci);
    if (a < 0) return false;
    const std::size_t mark = trail_.size();
    // Join an existing class.
    const std::vector<int> classes = order_;
    for (int c : classes) {
      assign(a, c);
      if (propagate() && dfs()) return true;
      undo(mark);
    }
    // Open a new class strictly inside each gap.
    for (std::size_t p = 0; p + 1 < classes.size(); ++p) {
      class_const_.emplace_back();
      int c = static_cast<int>(class_const_.size()) - 1;
      order_.insert(order_.begin() + static_cast<std::ptrdiff_t>(p) + 1, c);
      reindex();
      assign(a, c);
      if (propagate() && dfs()) return true;
      undo(mark);
      order_.erase(order_.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      class_const_.pop_back();
      reindex();
    }
    return false;
  }

  const GroundTheory& t_;
  std::size_t spacing_;
  std::vector<std::optional<TruthValue>> class_const_;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<int> atom_class_;
  std::vector<std::vector<int>> occ_;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<int> trail_;
  std::size_t head_ = 0;
  std::uint64_t nodes_ = 0;
};

SatReport report(const GroundTheory& t, bool sat, const std::vector<TruthValue>& v, std::uint64_t nodes) {
  SatReport r;
  r.sat = sat;
  r.nodes = nodes;
  if (sat)
    for (std::size_t a = 0; a < t.atoms.size(); ++a) r.witness.emplace(t.atoms[a], v[a]);
  return r;
}

std::uint64_t checked_power(std::size_t base, std::size_t exp) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (total > (std::uint64_t{1} << 40) / std::max<std::size_t>(base, 1))
      throw std::length_error("grid enumeration too large");
    total *= base;
  }
  return total;
}

void decode(std::uint64_t index, const std::vector<TruthValue>& grid, std::vector<TruthValue>& v) {
  for (std::size_t k = v.size(); k-- > 0;) {
    v[k] = grid[index % grid.size()];
    index /= grid.size();
  }
}

template <class Pred>
std::uint64_t first_index(std::uint64_t total, std::size_t n_atoms, const std::vector<TruthValue>& grid, bool parallel,
                          Pred&& pred) {
  std::uint64_t best = total;
  if (!parallel) {
    std::vector<TruthValue> v(n_atoms);
    for (std::uint64_t i = 0; i < total; ++i) {
      decode(i, grid, v);
      if (pred(v)) return i;
    }
    return best;
  }
#pragma omp parallel
  {
    std::vector<TruthValue> v(n_atoms);
#pragma omp for reduction(min : best) schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
      auto u = static_cast<std::uint64_t>(i);
      if (u >= best) continue;
      decode(u, grid, v);
      if (pred(v)) best = u;
    }
  }
  return best;
}

SatReport enumerate(const GroundTheory& t, std::size_t interior, bool parallel) {
  for (const auto& c : t.clauses)
    if (c.empty()) return SatReport{};
  auto grid = sat_grid(t.constants, interior);
  std::uint64_t total = checked_power(grid.size(), t.atoms.size());
  std::uint64_t hit = first_index(total, t.atoms.size(), grid, parallel,
                                  [&](const std::vector<TruthValue>& v) { return theory_true(t, v); });
  if (hit == total) return report(t, false, {}, total);
  std::vector<TruthValue> v(t.atoms.size());
  decode(hit, grid, v);
  return report(t, true, v, hit + 1);
}

struct FormulaSpace {
  std::map<std::string, int> index;
  std::vector<std::string> atoms;
  std::vector<TruthValue> grid;
  std::uint64_t total = 1;
};

FormulaSpace formula_space(const std::vector<FormulaPtr>& fs, const std::vector<TermPtr>& domain) {
  FormulaSpace s;
  GroundTheory consts;
  consts.add_constant(TruthValue(0));
  consts.add_constant(TruthValue(1));
  for (const auto& f : fs) {
    collect_ground_atoms(f, domain, s.index, s.atoms);
    std::vector<TruthValue> cs;
    collect_constants(f, cs);
    for (const auto& c : cs) consts.add_constant(c);
  }
  s.grid = sat_grid(consts.constants, s.atoms.size());
  s.total = checked_power(s.grid.size(), s.atoms.size());
  return s;
}

}  // namespace

std::vector<TruthValue> sat_grid(const std::vector<TruthValue>& constants, std::size_t interior) {
  std::vector<TruthValue> cs = constants;
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  std::vector<TruthValue> grid;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    grid.push_back(cs[k]);
    if (k + 1 == cs.size()) break;
    TruthValue step = (cs[k + 1] - cs[k]) / TruthValue(static_cast<std::int64_t>(interior) + 1);
    for (std::size_t i = 1; i <= interior; ++i) grid.push_back(cs[k] + step * TruthValue(static_cast<std::int64_t>(i)));
  }
  return grid;
}

SatReport solve(const GroundTheory& t) {
  // Clauses sharing no atoms are solved independently.
  const std::size_t n = t.atoms.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t a = 0; a < n; ++a) parent[a] = a;
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto clause_atoms = [](const GClause& c) {
    std::vector<int> out;
    for (const auto& l : c) {
      out.insert(out.end(), l.lhs.atoms.begin(), l.lhs.atoms.end());
      out.insert(out.end(), l.rhs.atoms.begin(), l.rhs.atoms.end());
    }
    return out;
  };
  std::vector<std::vector<int>> atoms_of(t.clauses.size());
  for (std::size_t ci = 0; ci < t.clauses.size(); ++ci) {
    atoms_of[ci] = clause_atoms(t.clauses[ci]);
    if (atoms_of[ci].empty()) {
      if (!clause_true(t.clauses[ci], {})) return report(t, false, {}, 0);
      continue;
    }
    for (int a : atoms_of[ci]) parent[find(static_cast<std::size_t>(a))] = find(static_cast<std::size_t>(atoms_of[ci][0]));
  }
  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t ci = 0; ci < t.clauses.size(); ++ci)
    if (!atoms_of[ci].empty()) components[find(static_cast<std::size_t>(atoms_of[ci][0]))].push_back(ci);

  std::vector<TruthValue> v(n, t.constants.front());
  std::uint64_t nodes = 0;
  for (const auto& [root, clause_ids] : components) {
    GroundTheory sub;
    sub.constants = t.constants;
    std::map<int, int> local;
    std::vector<int> global;
    auto remap = [&](GSide side) {
      for (int& a : side.atoms) {
        auto [it, inserted] = local.emplace(a, static_cast<int>(global.size()));
        if (inserted) {
          global.push_back(a);
          sub.atoms.push_back(t.atoms[static_cast<std::size_t>(a)]);
        }
        a = it->second;
      }
      return side;
    };
    for (std::size_t ci : clause_ids) {
      GClause c;
      for (const auto& l : t.clauses[ci]) c.push_back({remap(l.lhs), l.rel, remap(l.rhs)});
      sub.clauses.push_back(std::move(c));
    }
    OrderSearch search(sub, n);
    const bool sat = search.run();
    nodes += search.nodes();
    if (!sat) return report(t, false, {}, nodes);
    auto w = search.witness();
    for (std::size_t a = 0; a < global.size(); ++a) v[static_cast<std::size_t>(global[a])] = w[a];
  }
  if (!theory_true(t, v)) throw std::logic_error("oracle produced a witness that fails the theory");
  return report(t, true, v, nodes);
}

SatReport ground_sat_oracle(const ClausalTheory& s) { return solve(ground_theory(s)); }

SatReport enumerate_grid_serial(const GroundTheory& t, std::size_t interior) { return enumerate(t, interior, false); }

SatReport enumerate_grid_parallel(const GroundTheory& t, std::size_t interior) { return enumerate(t, interior, true); }

bool grid_satisfiable(const std::vector<FormulaPtr>& fs, const std::vector<TermPtr>& domain, bool parallel) {
  FormulaSpace s = formula_space(fs, domain);
  std::uint64_t hit = first_index(s.total, s.atoms.size(), s.grid, parallel, [&](const std::vector<TruthValue>& v) {
    GroundAtomModel m(domain, &s.index, &v);
    return std::all_of(fs.begin(), fs.end(), [&](const FormulaPtr& f) { return holds(f, m); });
  });
  return hit != s.total;
}

bool grid_entails(const std::vector<FormulaPtr>& premises, const FormulaPtr& goal, const std::vector<TermPtr>& domain,
                  bool parallel) {
  std::vector<FormulaPtr> all = premises;
  all.push_back(goal);
  FormulaSpace s = formula_space(all, domain);
  std::uint64_t hit = first_index(s.total, s.atoms.size(), s.grid, parallel, [&](const std::vector<TruthValue>& v) {
    GroundAtomModel m(domain, &s.index, &v);
    for (const auto& f : premises)
      if (!holds(f, m)) return false;
    return !holds(goal, m);
  });
  return hit == s.total;
}

}  // namespace gforge
