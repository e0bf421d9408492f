#include "semicat/pvar.hpp"

#include <algorithm>

#include "semicat/greens.hpp"
#include "semicat/group.hpp"

namespace semicat {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_p_power(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Pvar pvar_trivial_group() {
  Pvar v;
  v.name = "triv";
  v.kind = PvarKind::group;
  v.fitting = true;
  v.extension_closed = true;
  v.member = [](const FiniteMonoid& m) { return m.size == 1; };
  return v;
}

Pvar pvar_p_group(int p) {
  require(is_prime(p), "UnknownPredicate",
          "p:" + std::to_string(p) + " needs a prime");
  Pvar v;
  v.name = "p:" + std::to_string(p);
  v.kind = PvarKind::group;
  v.fitting = true;
  v.extension_closed = true;
  v.member = [p](const FiniteMonoid& m) { return is_p_power(m.size, p); };
  return v;
}

Pvar pvar_nilpotent() {
  Pvar v;
  v.name = "nil";
  v.kind = PvarKind::group;
  v.fitting = true;  // Fitting's theorem; not closed under extension
  v.extension_closed = false;
  v.member = [](const FiniteMonoid& m) {
    return is_nilpotent(group_from_monoid(m));
  };
  return v;
}

Pvar pvar_solvable() {
  Pvar v;
  v.name = "sol";
  v.kind = PvarKind::group;
  v.fitting = true;
  v.extension_closed = true;
  v.member = [](const FiniteMonoid& m) {
    return is_solvable(group_from_monoid(m));
  };
  return v;
}

Pvar pvar_all_groups() {
  Pvar v;
  v.name = "all";
  v.kind = PvarKind::group;
  v.fitting = true;
  v.extension_closed = true;
  v.member = [](const FiniteMonoid&) { return true; };
  return v;
}

Pvar pvar_semilattice() {
  Pvar v;
  v.name = "sl";
  v.kind = PvarKind::monoid;
  v.member = [](const FiniteMonoid& m) {
    for (ElementId x = 0; x < m.size; ++x) {
      if (!m.is_idempotent(x)) return false;
      for (ElementId y = 0; y < m.size; ++y)
        if (m.mul(x, y) != m.mul(y, x)) return false;
    }
    return true;
  };
  return v;
}

Pvar pvar_trivial_monoid() {
  Pvar v;
  v.name = "mtriv";
  v.kind = PvarKind::monoid;
  v.member = [](const FiniteMonoid& m) { return m.size == 1; };
  return v;
}

Pvar pvar_ds() {
  Pvar v;
  v.name = "ds";
  v.kind = PvarKind::monoid;
  v.member = [](const FiniteMonoid& m) {
    GreensData g = greens(m);
    for (int j = 0; j < g.num_j; ++j) {
      if (!g.j_regular[j]) continue;
      for (ElementId x : g.j_members[j])
        for (ElementId y : g.j_members[j])
          if (g.j_class[m.mul(x, y)] != j) return false;
    }
    return true;
  };
  return v;
}

bool subgroups_in(const FiniteMonoid& M, const Pvar& h) {
  require(h.kind == PvarKind::group, "WrongPredicateKind",
          h.name + " is not a group pseudovariety");
  GreensData g = greens(M);
  for (ElementId e : g.idempotents) {
    FiniteGroup he = maximal_subgroup(M, g, e);
    if (!h.test(he.monoid)) return false;
  }
  return true;
}

Pvar pvar_ds_and_hbar(const Pvar& h) {
  require(h.kind == PvarKind::group, "WrongPredicateKind",
          h.name + " is not a group pseudovariety");
  Pvar v;
  v.name = "dsh:" + h.name;
  v.kind = PvarKind::monoid;
  Pvar ds = pvar_ds();
  v.member = [ds, h](const FiniteMonoid& m) {
    return ds.test(m) && subgroups_in(m, h);
  };
  return v;
}

Pvar parse_pvar(const std::string& name) {
  if (name == "triv") return pvar_trivial_group();
  if (name == "nil") return pvar_nilpotent();
  if (name == "sol") return pvar_solvable();
  if (name == "all") return pvar_all_groups();
  if (name == "sl") return pvar_semilattice();
  if (name == "mtriv") return pvar_trivial_monoid();
  if (name == "ds") return pvar_ds();
  if (name.rfind("p:", 0) == 0) {
    int p = 0;
    try {
      p = std::stoi(name.substr(2));
    } catch (...) {
      fail("UnknownPredicate", "bad prime in " + name);
    }
    return pvar_p_group(p);
  }
  if (name.rfind("dsh:", 0) == 0) return pvar_ds_and_hbar(parse_pvar(name.substr(4)));
  fail("UnknownPredicate", "no pseudovariety named " + name);
}

std::vector<std::string> builtin_pvar_names() {
  return {"triv", "p:<q>", "nil", "sol", "all", "sl", "mtriv", "ds", "dsh:<h>"};
}

}  // namespace semicat
