#pragma once

#include <functional>
#include <string>
#include <vector>

#include "semicat/monoid.hpp"

namespace semicat {

enum class PvarKind { group, monoid };

/// A named membership tester for a pseudovariety of groups or of monoids.
/// Group-kind testers receive tables that are already known to be groups.
/// `fitting` and `extension_closed` are meaningful for group kind only.
struct Pvar {
  std::string name;
  PvarKind kind = PvarKind::group;
  bool fitting = false;
  bool extension_closed = false;
  std::function<bool(const FiniteMonoid&)> member;

  bool test(const FiniteMonoid& m) const { return member(m); }
};

/// Builtins, group kind: triv, p:<q> (q prime), nil, sol, all.
/// Monoid kind: sl, mtriv, ds, dsh:<h> (DS with all subgroups in h).
Pvar parse_pvar(const std::string& name);

/// Registered names, for --help and error messages.
std::vector<std::string> builtin_pvar_names();

Pvar pvar_trivial_group();
Pvar pvar_p_group(int p);
Pvar pvar_nilpotent();
Pvar pvar_solvable();
Pvar pvar_all_groups();
Pvar pvar_semilattice();
Pvar pvar_trivial_monoid();
Pvar pvar_ds();
Pvar pvar_ds_and_hbar(const Pvar& h);

/// True iff every maximal subgroup of M (at its idempotents) lies in h.
/// Builtin group predicates are subgroup-closed, so this decides whether
/// all subgroups of M lie in h.
bool subgroups_in(const FiniteMonoid& M, const Pvar& h);

}  // namespace semicat
