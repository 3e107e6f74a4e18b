"""Quantified evaluation of monadic formulas into Meanings.

A Binding fixes the world, an ordered pool of individual variables,
and a valuation xi of pool variables onto individuals (onto: every
individual is some variable's value; by default one variable per
individual).

Evaluation runs one unified induction:

  * propositional variables come from the propositional assignment;
  * a predicate application whose variable was bound by an enclosing
    quantifier takes the atom meaning at that variable's individual;
  * a free predicate application takes, under base mode "all", the
    member-wise union of its atom meanings across the whole pool, and
    under base mode "any" the atom meaning at one designated variable;
  * disjunction and negation run the propositional cores on the
    computed Meanings;
  * (x)q merges the instance meanings of q at every pool variable
    member by member; (Ex)q pools all members of all instances into
    one family.

The universal merge uses the canonical member order (all-diagonal
members first) and repeats a shorter family's last member when counts
differ, which keeps the merge total and makes its truth value exactly
the conjunction of the instance truth values; the existential family
union is exactly the disjunction.  `memberwise_union` is the strict
public form of the same operation: it requires equal member counts and
raises StructureMismatch otherwise.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .meanings import (
    Meaning,
    StructureMismatch,
    atom_meaning,
    disjoin,
    is_true,
    memberwise_union,
    negate,
)
from .ontology import World
from .propsem import PropAssignment, constant_name, enumerate_assignments
from .syntax import (
    Exists,
    ForAll,
    Formula,
    Not,
    Or,
    PredApp,
    PropVar,
    free_variables,
    predicates,
    prop_variables,
)

__all__ = [
    "Binding",
    "FoVerdict",
    "PredicateTemplate",
    "StructureMismatch",
    "default_binding",
    "enumerate_worlds",
    "eval_fo",
    "instance_meaning",
    "logical_truth",
    "memberwise_union",
]

_POOL_NAMES = ("x", "y", "z")


@dataclass
class Binding:
    """World, variable pool, and pool valuation for quantified evaluation."""

    world: World
    pool: tuple[str, ...]
    xi: dict[str, str]

    def __post_init__(self):
        if not self.pool:
            raise ValueError("binding pool is empty")
        for v in self.pool:
            if v not in self.xi:
                raise ValueError(f"pool variable {v} has no value")
        individuals = set(self.world.individuals)
        for v, ind in self.xi.items():
            if ind not in individuals:
                raise ValueError(f"{v} is bound to unknown individual {ind}")
        if individuals - {self.xi[v] for v in self.pool}:
            raise ValueError("pool valuation must cover every individual")


def default_binding(world: World, min_pool: int = 3) -> Binding:
    """One pool variable per individual (x, y, z, x1, ...), in name order."""
    individuals = sorted(world.individuals)
    if not individuals:
        raise ValueError("world has no individuals")
    size = max(len(individuals), min_pool)
    names = []
    suffix = 0
    while len(names) < size:
        for base in _POOL_NAMES:
            names.append(base if suffix == 0 else f"{base}{suffix}")
            if len(names) == size:
                break
        suffix += 1
    xi = {v: individuals[i % len(individuals)] for i, v in enumerate(names)}
    return Binding(world=world, pool=tuple(names), xi=xi)


@dataclass(frozen=True)
class PredicateTemplate:
    """A monadic predicate with its marked argument position."""

    predicate: str
    marked: tuple[int, ...] = (0,)


def instance_meaning(template: PredicateTemplate | str, var: str, binding: Binding) -> Meaning:
    """Atom meaning of the predicate at the individual xi(var)."""
    name = template.predicate if isinstance(template, PredicateTemplate) else template
    if var not in binding.xi:
        raise ValueError(f"unbound individual variable {var}")
    return atom_meaning(binding.world, name, (binding.xi[var],))


def eval_fo(
    f: Formula,
    binding: Binding,
    assignment: PropAssignment | None = None,
    policy: str = "minimal",
    base_mode: str = "all",
    any_variable: str | None = None,
) -> Meaning:
    """Meaning of a monadic formula under binding and assignment."""
    if base_mode not in ("all", "any"):
        raise ValueError(f"unknown base mode {base_mode!r}")
    if base_mode == "any":
        if any_variable is None:
            raise ValueError("base mode 'any' needs a designated variable")
        if any_variable not in binding.xi:
            raise ValueError(f"designated variable {any_variable} is not in the pool valuation")
    unbound = free_variables(f) - set(binding.xi)
    if unbound:
        raise ValueError(f"unbound individual variables: {sorted(unbound)}")
    world = binding.world

    def ev(g: Formula, env: dict[str, str]) -> Meaning:
        if isinstance(g, PropVar):
            if assignment is None or g.name not in assignment.values:
                raise ValueError(f"assignment does not cover variable {g.name}")
            return assignment.values[g.name]
        if isinstance(g, PredApp):
            if g.argument in env:
                return atom_meaning(world, g.predicate, (env[g.argument],))
            if base_mode == "any":
                return atom_meaning(world, g.predicate, (binding.xi[any_variable],))
            instances = [
                atom_meaning(world, g.predicate, (binding.xi[z],)) for z in binding.pool
            ]
            return memberwise_union(instances, pad=True)
        if isinstance(g, Or):
            return disjoin(ev(g.left, env), ev(g.right, env))
        if isinstance(g, Not):
            return negate(ev(g.operand, env), policy)
        if isinstance(g, ForAll):
            instances = [
                ev(g.body, {**env, g.variable: binding.xi[z]}) for z in binding.pool
            ]
            return memberwise_union(instances, pad=True)
        if isinstance(g, Exists):
            members = frozenset()
            for z in binding.pool:
                members |= ev(g.body, {**env, g.variable: binding.xi[z]}).members
            return Meaning(members)
        raise TypeError(f"not a formula: {g!r}")

    return ev(f, {})


# ---------------------------------------------------------------------------
# logical truth over finite worlds

@dataclass
class FoVerdict:
    kind: str  # logical_truth | falsifiable
    worlds_checked: int
    witness_world: World | None = None
    witness_assignment: PropAssignment | None = None


def enumerate_worlds(
    predicate_names,
    prop_vars,
    max_individuals: int = 3,
) -> list[World]:
    """Every world over the given unary relations, up to max_individuals.

    Domains {a}, {a, b}, ... and every subset of facts, smaller and
    lexicographically earlier subsets first.  Constants carrying the
    propositional variables are declared true; assignment sweeps vary
    their values, so world enumeration does not.
    """
    preds = sorted(set(predicate_names))
    constants = tuple((constant_name(v), True) for v in sorted(set(prop_vars)))
    letters = [chr(ord("a") + i) for i in range(max_individuals)]
    out = []
    for n in range(1, max_individuals + 1):
        individuals = tuple(letters[:n])
        atoms = sorted((p, (ind,)) for p in preds for ind in individuals)
        for size in range(len(atoms) + 1):
            for chosen in itertools.combinations(atoms, size):
                out.append(
                    World(
                        individuals=individuals,
                        relations=tuple((p, 1) for p in preds),
                        facts=frozenset(chosen),
                        constants=constants,
                    )
                )
    return out


def logical_truth(
    f: Formula,
    worlds=None,
    *,
    max_individuals: int = 3,
    policy: str = "minimal",
    mode: str = "canonical",
    seed: int | None = None,
    count: int | None = None,
    size_bound: int = 3,
) -> FoVerdict:
    """Is f true in every finite world (and assignment) swept?"""
    if free_variables(f):
        raise ValueError("logical truth needs a closed formula")
    pvars = sorted(prop_variables(f))
    if worlds is None:
        worlds = enumerate_worlds(sorted(predicates(f)) or ["S"], pvars, max_individuals)
    checked = 0
    for w in worlds:
        binding = default_binding(w)
        if pvars:
            assignments = enumerate_assignments(
                pvars, w, mode, seed=seed, count=count, size_bound=size_bound
            )
        else:
            assignments = [PropAssignment(values={}, world=w)]
        for h in assignments:
            checked += 1
            if not is_true(eval_fo(f, binding, h, policy)):
                return FoVerdict(
                    kind="falsifiable",
                    worlds_checked=checked,
                    witness_world=w,
                    witness_assignment=h,
                )
    return FoVerdict(kind="logical_truth", worlds_checked=checked)
