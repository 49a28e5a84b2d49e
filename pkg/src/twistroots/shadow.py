"""Finite shadow configurations: per-class action states and their parabolic set.

A module acting on the root system splits each real delta-class into injective
("in") and locally-nilpotent ("ln") parts.  Per-class coherence makes a finite
record sufficient: one state per nonzero real delta-free root.  A state is
either fully locally nilpotent, fully injective, or hybrid with a boundary
profile (case, m, t) shared by the +- pair of classes.

Hybrid boundary semantics, with gamma := rho + m*delta anchored at the
canonical representative rho of the pair (the lexicographically larger of the
two signs):

  case III:  on rho:  dc >= m+1 -> in,  dc <= m       -> ln
             on -rho: dc >= t-m -> in,  dc <= t-1-m   -> ln
  case IV:   on rho:  dc <= m-1 -> in,  dc >= m       -> ln
             on -rho: dc <= -t-m -> in, dc >= 1-t-m   -> ln

Boundary membership is taken exactly at these bounds; the two halves partition
the class, so member_ln and member_in are complementary on real roots.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .families import AlgebraParams
from .lattice import RootVector
from .reporting import Verdict
from .rootsys import (
    RootClass,
    classify,
    doubling_pairs,
    even_table,
    even_window,
    real_dot_roots,
    root_table,
)
from .tables import REAL_SHAPES, shape_of


class ConfigError(ValueError):
    """Malformed or incomplete shadow configuration input."""


class Case(Enum):
    III = "III"
    IV = "IV"


@dataclass(frozen=True)
class HybridProfile:
    """Boundary data of a hybrid pair; t is constrained to {-1, 0, 1}."""

    case: Case
    m: int
    t: int

    def __post_init__(self) -> None:
        if self.t not in (-1, 0, 1):
            raise ConfigError(f"hybrid t must be in {{-1, 0, 1}}, got {self.t}")

    def reanchored(self) -> HybridProfile:
        """The same split expressed relative to the opposite representative."""
        if self.case is Case.III:
            return HybridProfile(Case.III, self.t - self.m - 1, self.t)
        return HybridProfile(Case.IV, 1 - self.t - self.m, self.t)


class StateKind(Enum):
    FULL_LN = "full_ln"
    FULL_IN = "full_in"
    HYBRID = "hybrid"


@dataclass(frozen=True)
class ClassState:
    kind: StateKind
    profile: HybridProfile | None = None

    def __post_init__(self) -> None:
        if (self.kind is StateKind.HYBRID) != (self.profile is not None):
            raise ConfigError("hybrid states carry a profile; full states do not")

    @property
    def is_hybrid(self) -> bool:
        return self.kind is StateKind.HYBRID


FULL_LN = ClassState(StateKind.FULL_LN)
FULL_IN = ClassState(StateKind.FULL_IN)


def hybrid(case: Case, m: int, t: int) -> ClassState:
    return ClassState(StateKind.HYBRID, HybridProfile(case, m, t))


def canonical_rep(dot: RootVector) -> RootVector:
    """The anchor of a +- class pair: the larger of the two in canonical order."""
    return max(dot, -dot)


@dataclass
class ShadowConfig:
    """Total assignment of a ClassState to every nonzero real delta-free root.

    Hybrid profiles are stored anchored at the canonical representative of the
    pair and must be literally shared between the two signs; construct through
    ``from_assignments`` (or ``from_json``) to have anchoring normalized and
    forced negatives inferred.  Treat instances as immutable once validated.
    """

    params: AlgebraParams
    states: dict[RootVector, ClassState]

    @classmethod
    def from_assignments(
        cls, params: AlgebraParams, assignments: dict[RootVector, ClassState]
    ) -> ShadowConfig:
        """Build a config from per-class assignments where each hybrid profile is
        anchored at its own listed class; unlisted hybrid negatives are inferred,
        any other omission is rejected."""
        states: dict[RootVector, ClassState] = {}
        for dot, state in assignments.items():
            if state.is_hybrid and dot != canonical_rep(dot):
                state = ClassState(StateKind.HYBRID, state.profile.reanchored())
            if dot in states and states[dot] != state:
                raise ConfigError(f"conflicting states for class {dot}")
            states[dot] = state
        for dot, state in list(states.items()):
            if state.is_hybrid:
                mirror = states.get(-dot)
                if mirror is None:
                    states[-dot] = state
                elif mirror != state:
                    raise ConfigError(
                        f"hybrid classes {dot} and {-dot} carry different profiles"
                    )
        missing = [d for d in real_dot_roots(params) if d not in states]
        if missing:
            raise ConfigError(f"no state for class {missing[0]} (and {len(missing) - 1} more)")
        extra = [d for d in states if d not in set(real_dot_roots(params))]
        if extra:
            raise ConfigError(f"state assigned to non-class vector {extra[0]}")
        return cls(params, states)

    # JSON ---------------------------------------------------------------

    def to_json(self) -> dict:
        classes = []
        for dot in sorted(self.states):
            state = self.states[dot]
            if state.is_hybrid:
                prof = state.profile
                if dot != canonical_rep(dot):
                    prof = prof.reanchored()
                enc: object = {"hybrid": {"case": prof.case.value, "m": prof.m, "t": prof.t}}
            else:
                enc = state.kind.value
            classes.append({"root": dot.to_json(), "state": enc})
        return {"classes": classes}

    @classmethod
    def from_json(cls, params: AlgebraParams, doc: dict) -> ShadowConfig:
        if not isinstance(doc, dict) or "classes" not in doc:
            raise ConfigError("config document must have a 'classes' list")
        assignments: dict[RootVector, ClassState] = {}
        for idx, entry in enumerate(doc["classes"]):
            where = f"classes[{idx}]"
            try:
                dot = RootVector.from_json(entry["root"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ConfigError(f"{where}: bad root encoding: {exc}") from exc
            enc = entry.get("state")
            if enc == "full_ln":
                state = FULL_LN
            elif enc == "full_in":
                state = FULL_IN
            elif isinstance(enc, dict) and "hybrid" in enc:
                h = enc["hybrid"]
                try:
                    state = hybrid(Case(h["case"]), int(h["m"]), int(h["t"]))
                except (KeyError, ValueError) as exc:
                    raise ConfigError(f"{where}: bad hybrid profile: {exc}") from exc
            else:
                raise ConfigError(f"{where}: unknown state encoding {enc!r}")
            if dot in assignments:
                raise ConfigError(f"{where}: duplicate class {dot}")
            assignments[dot] = state
        return cls.from_assignments(params, assignments)

    @classmethod
    def load(cls, params: AlgebraParams, path: str) -> ShadowConfig:
        with open(path, encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
        return cls.from_json(params, doc)


# --- validity -----------------------------------------------------------------


def validate(cfg: ShadowConfig) -> Verdict:
    """Totality, +-symmetry of hybrid profiles, and the doubling rules for odd
    classes whose double is again a class."""
    v = Verdict()
    classes = set(real_dot_roots(cfg.params))
    v.record(set(cfg.states) == classes, "states total on real classes",
             f"{len(cfg.states)} states for {len(classes)} classes")
    if not v.ok:
        return v
    for dot in sorted(classes):
        rep = canonical_rep(dot)
        if dot != rep:
            continue
        a, b = cfg.states[rep], cfg.states[-rep]
        v.record(
            a.is_hybrid == b.is_hybrid and (not a.is_hybrid or a.profile == b.profile),
            "hybrid states are +-symmetric with a shared profile",
            f"{rep}: {a.kind.value} vs {-rep}: {b.kind.value}",
        )
    for dot, doubled in doubling_pairs(cfg.params):
        st, st2 = cfg.states[dot], cfg.states[doubled]
        if st.kind is StateKind.FULL_LN:
            v.record(st2.kind is StateKind.FULL_LN,
                     "fully-ln odd class doubles to a fully-ln class",
                     f"{dot} full_ln but {doubled} {st2.kind.value}")
        elif st.kind is StateKind.FULL_IN:
            v.record(st2.kind is StateKind.FULL_IN,
                     "fully-in odd class doubles to a fully-in class",
                     f"{dot} full_in but {doubled} {st2.kind.value}")
        else:
            v.record(True, "hybrid odd class imposes no doubling constraint")
    return v


# --- membership ----------------------------------------------------------------


def _require_real(cfg: ShadowConfig, v: RootVector) -> RootVector:
    info = classify(cfg.params, v)
    if info.root_class is not RootClass.REAL:
        raise ValueError(f"{v} is not a nonzero real root")
    return v.dot_part()


def _hybrid_in(profile: HybridProfile, on_canonical: bool, d: int) -> bool:
    m, t = profile.m, profile.t
    if profile.case is Case.III:
        return d >= m + 1 if on_canonical else d >= t - m
    return d <= m - 1 if on_canonical else d <= -t - m


def _hybrid_ln(profile: HybridProfile, on_canonical: bool, d: int) -> bool:
    m, t = profile.m, profile.t
    if profile.case is Case.III:
        return d <= m if on_canonical else d <= t - 1 - m
    return d >= m if on_canonical else d >= 1 - t - m


def member_in(cfg: ShadowConfig, v: RootVector) -> bool:
    """Whether the real root v lies in the injective part under this config."""
    dot = _require_real(cfg, v)
    state = cfg.states[dot]
    if state.kind is StateKind.FULL_IN:
        return True
    if state.kind is StateKind.FULL_LN:
        return False
    return _hybrid_in(state.profile, dot == canonical_rep(dot), v.dc)


def member_ln(cfg: ShadowConfig, v: RootVector) -> bool:
    """Whether the real root v lies in the locally nilpotent part."""
    dot = _require_real(cfg, v)
    state = cfg.states[dot]
    if state.kind is StateKind.FULL_LN:
        return True
    if state.kind is StateKind.FULL_IN:
        return False
    return _hybrid_ln(state.profile, dot == canonical_rep(dot), v.dc)


def is_hybrid_module(cfg: ShadowConfig) -> bool:
    """All classes hybrid."""
    return all(st.is_hybrid for st in cfg.states.values())


def is_tight(cfg: ShadowConfig) -> bool:
    """At least one class is not hybrid."""
    return not is_hybrid_module(cfg)


def check_mixed_components(cfg: ShadowConfig, mmax: int = 8) -> Verdict:
    """Each nonempty even component must see both ln and in behaviour on a window:
    its ln part is nonempty and proper inside its nonzero real part."""
    v = Verdict()
    p = cfg.params
    for i in (1, 2):
        if not even_table(p, i):
            continue
        roots = [w for w in even_window(p, i, mmax, include_imaginary=False)]
        has_ln = any(member_ln(cfg, w) for w in roots)
        has_in = any(member_in(cfg, w) for w in roots)
        v.record(has_ln, f"ln part nonempty in component {i}", f"window mmax={mmax}")
        v.record(has_in, f"ln part proper in component {i}", f"window mmax={mmax}")
    return v


# --- the parabolic set ----------------------------------------------------------


@dataclass(frozen=True)
class ParabolicSet:
    """Membership predicate for the set  f-ln  u  -(f-in)  u  hybrid  u  Z*delta,
    defined on real and imaginary roots only."""

    cfg: ShadowConfig

    def contains_class(self, dot: RootVector) -> bool:
        """Whether the whole real class over ``dot`` lies in the set (membership
        is constant on classes)."""
        states = self.cfg.states
        return (
            states[dot].kind is StateKind.FULL_LN
            or states[-dot].kind is StateKind.FULL_IN
            or states[dot].is_hybrid
        )

    def __contains__(self, v: RootVector) -> bool:
        info = classify(self.cfg.params, v) if not v.is_zero else None
        if info is None or info.root_class is RootClass.IMAGINARY:
            return True
        if info.root_class is RootClass.NONSINGULAR:
            raise ValueError(f"{v} is nonsingular; the set lives in the real+imaginary part")
        return self.contains_class(v.dot_part())


def derive_parabolic(cfg: ShadowConfig) -> ParabolicSet:
    return ParabolicSet(cfg)


def _window_sum_witness(s1, s2, s3, mmax: int):
    for m in s1.window(mmax):
        for n in s2.window(mmax):
            if abs(m + n) <= mmax and (m + n) in s3:
                return (m, n)
    return None


def check_parabolic(cfg: ShadowConfig, mmax: int = 8) -> Verdict:
    """Cover and closure of the derived set inside the real+imaginary part, on the
    window |dc| <= mmax.

    Both quantifiers run over delta-classes: membership is constant on classes,
    so a pair of window roots violates closure exactly when their dot parts do
    with some window-realizable delta coefficients (the reported witness).
    """
    v = Verdict()
    p = cfg.params
    pset = derive_parabolic(cfg)
    table = root_table(p)
    real_dots = real_dot_roots(p)

    for dot in real_dots:
        v.record(
            pset.contains_class(dot) or pset.contains_class(-dot),
            "cover: every real class meets the set or its negative",
            f"class {dot}",
        )

    member_dots = [d for d in real_dots if pset.contains_class(d)]
    zero = next(d for d in table if d.is_zero)
    member_dots.append(zero)  # the imaginary line belongs to the set
    for idx, a in enumerate(member_dots):
        for b in member_dots[idx:]:
            c = a + b
            prog = table.get(c)
            if prog is None:
                continue
            if c.is_zero:
                continue  # sums into the imaginary line stay in the set
            if shape_of(c) not in REAL_SHAPES:
                continue  # nonsingular sums are outside the real+imaginary part
            wit = _window_sum_witness(table[a], table[b], prog, mmax)
            if wit is None:
                continue
            m, n = wit
            v.record(
                pset.contains_class(c),
                "closure: sums of set members stay in the set",
                f"{a.with_dc(m)} + {b.with_dc(n)} = {c.with_dc(m + n)}",
            )
    return v
