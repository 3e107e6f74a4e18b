"""Meanings: non-empty sets of non-empty sets of tagged pairs.

A Meaning is the denotation of a formula over a world of complexes: a
finite family of members, each member a finite non-empty set of Pairs.
A Meaning is true exactly when some member is all-diagonal.

Canonical member order sorts all-diagonal members first and then by
content.  Everything that needs a deterministic reading of a Meaning
(printing, member-wise union) goes through that order.

`transversals` builds the family of hitting sets of a family: sets
drawn from the family's union that intersect every member.  The
`minimal` policy keeps only inclusion-minimal hitting sets; `full`
keeps them all.  `swap_family` pushes the tag swap through a family
pointwise.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ontology import Pair, World, pair_key, swap

Member = frozenset  # frozenset[Pair]

POLICIES = ("minimal", "full")

_FULL_POLICY_LIMIT = 2**18


@dataclass(frozen=True)
class Meaning:
    members: frozenset[frozenset[Pair]]

    def __post_init__(self):
        if not self.members:
            raise ValueError("a Meaning needs at least one member")
        for m in self.members:
            if not m:
                raise ValueError("Meaning members must be non-empty")


def meaning(*members) -> Meaning:
    """Convenience constructor from iterables of Pairs."""
    return Meaning(frozenset(frozenset(m) for m in members))


def member_key(member: frozenset[Pair]) -> tuple:
    diag = all(p.diagonal for p in member)
    return (0 if diag else 1, tuple(sorted(pair_key(p) for p in member)))


def sorted_members(m: Meaning) -> list[frozenset[Pair]]:
    return sorted(m.members, key=member_key)


def is_true(m: Meaning) -> bool:
    """True exactly when some member consists of diagonal pairs only."""
    return any(all(p.diagonal for p in member) for member in m.members)


def render_meaning(m: Meaning) -> str:
    rendered = []
    for member in sorted_members(m):
        inner = ", ".join(p.render() for p in sorted(member, key=pair_key))
        rendered.append("{" + inner + "}")
    return "{" + ", ".join(rendered) + "}"


def meaning_in_world(m: Meaning, w: World) -> bool:
    """Do all base complexes of m exist in w?"""
    from .ontology import existing_complexes

    existing = existing_complexes(w)
    return all(p.base in existing for member in m.members for p in member)


# ---------------------------------------------------------------------------
# family operations

def transversals(family, policy: str = "minimal") -> frozenset[frozenset[Pair]]:
    """Hitting sets of the family, drawn from its union.

    minimal: inclusion-minimal hitting sets only.
    full: every subset of the union that meets each member.
    """
    members = [frozenset(m) for m in family]
    if not members:
        raise ValueError("transversal of an empty family")
    if any(not m for m in members):
        raise ValueError("transversal family has an empty member")
    if policy == "minimal":
        candidates = {frozenset(choice) for choice in itertools.product(*members)}
        out = {
            c
            for c in candidates
            if not any(other < c for other in candidates)
        }
        return frozenset(out)
    if policy == "full":
        union = sorted(frozenset().union(*members), key=pair_key)
        if 2 ** len(union) > _FULL_POLICY_LIMIT:
            raise ValueError(f"full transversal family over {len(union)} pairs is too large")
        out = set()
        for size in range(1, len(union) + 1):
            for subset in itertools.combinations(union, size):
                s = frozenset(subset)
                if all(s & m for m in members):
                    out.add(s)
        return frozenset(out)
    raise ValueError(f"unknown policy {policy!r}")


def swap_family(family) -> frozenset[frozenset[Pair]]:
    """Apply the tag swap to every pair of every set in the family."""
    return frozenset(frozenset(swap(p) for p in m) for m in family)


# ---------------------------------------------------------------------------
# connective cores shared by the propositional and quantified evaluators

def disjoin(left: Meaning, right: Meaning) -> Meaning:
    return Meaning(left.members | right.members)


def negate(m: Meaning, policy: str = "minimal") -> Meaning:
    """Meaning of the negation of m.

    A single-member family maps each pair of its member to a swapped
    singleton; a larger family takes the swap of its hitting sets.
    """
    members = m.members
    if len(members) == 1:
        (only,) = members
        return Meaning(frozenset(frozenset({swap(p)}) for p in only))
    return Meaning(swap_family(transversals(members, policy)))


# ---------------------------------------------------------------------------
# member-wise union

class StructureMismatch(ValueError):
    """Raised when meanings cannot be merged member by member."""


def memberwise_union(meanings, pad: bool = False) -> Meaning:
    """Union of corresponding members under the canonical order.

    The inputs must agree on member count; corresponding members (k-th
    in canonical order) are unioned.  With pad=True a shorter family
    repeats its last member instead, so any non-empty input list can be
    merged; the quantifier evaluator relies on that totalized form.
    """
    items = [m for m in meanings]
    if not items:
        raise ValueError("member-wise union of no meanings")
    sorted_families = [sorted_members(m) for m in items]
    counts = {len(f) for f in sorted_families}
    if len(counts) > 1 and not pad:
        raise StructureMismatch(
            f"member counts differ: {sorted(len(f) for f in sorted_families)}"
        )
    width = max(counts)
    merged = []
    for k in range(width):
        bucket: set[Pair] = set()
        for fam in sorted_families:
            bucket.update(fam[min(k, len(fam) - 1)])
        merged.append(frozenset(bucket))
    return Meaning(frozenset(merged))


# ---------------------------------------------------------------------------
# atoms

def atom_meaning(w: World, relation: str, args: tuple[str, ...] = ()) -> Meaning:
    """Meaning of an atomic assertion in w.

    When the fact holds the existing positive complex appears diagonal;
    when it fails the existing negative complex appears flipped.  Either
    way the result is a single singleton member.
    """
    c = w.existing(relation, args)
    return meaning({Pair(c, c.positive)})
