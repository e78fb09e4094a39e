"""Registry of addressable constructions and the deliberate-failure fixtures.

Every certified construction has a stable string id; the command line
selects them by id or runs the whole non-fixture set.  Mutation fixtures
are intentionally broken variants (a swapped component, a dropped twist, a
dropped conjugation, a wrong cocycle value, a bumped lattice entry) whose
certificates must fail with a named check; they are excluded from "all"
and only run when selected explicitly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .classical import (MatrixAlg, cayley_conjugation_equivariance,
                        cayley_transform, cayley_transform_of_skew,
                        classical_certificate, full_linear_certificate,
                        orthogonal_alg, pgl_cayley, pgl_certificate,
                        symplectic_alg, unitary_alg)
from .errors import StructureError
from .group import ActionGen, Cocycle, identity_perm, twist_action
from .picard import (galois_matrix, invariants_certificate, lattice_certificate,
                     ledger_certificate, lines_certificate, preserves_form, fixes,
                     CANONICAL)
from .rank2 import (GAMMA, base_torus_group, g2_interface, g2_slot_certificate,
                    gamma_twisted_expected, pgu3_certificate, pgu3_lie_certificate,
                    rank2_torus_suite, twist_certificate, _action_tables_match)
from .ratmap import Certificate, EquivMap, check_equivariance
from .su3 import (build_su3_chain, chain_certificate, end_to_end, link_linear,
                  link_quotient, phi_certificate, phi_inverse, link_certificate)
from .surfaces import (SurfaceSpec, conic_certificate, conic_suite,
                       singular_points, surface_C, surface_membership, surface_Q,
                       surface_X, surface_Y, x_membership_certificate,
                       y_membership_certificate, y_singular_certificate)


@dataclass(frozen=True)
class Construction:
    id: str
    anchor: str
    run: object           # callable(seed, trials) -> Certificate
    fixture: bool = False


_REGISTRY: dict = {}


def register(cid: str, anchor: str, run, fixture: bool = False):
    if cid in _REGISTRY:
        raise StructureError(f"duplicate construction id {cid!r}")
    _REGISTRY[cid] = Construction(cid, anchor, run, fixture)


def all_ids(include_fixtures: bool = False):
    ids = sorted(_REGISTRY)
    if include_fixtures:
        return ids
    return [i for i in ids if not _REGISTRY[i].fixture]


def get(cid: str) -> Construction:
    if cid not in _REGISTRY:
        raise KeyError(cid)
    return _REGISTRY[cid]


def run_construction(cid: str, seed: int = 42, trials: int = 100) -> Certificate:
    return get(cid).run(seed, trials)


# -- mutation fixtures -------------------------------------------------------

def _mutant_swapped_components(seed: int, trials: int) -> Certificate:
    pair = link_quotient()
    m = pair.forward
    comps = (m.components[0], m.components[2], m.components[1])
    broken = EquivMap("mutation.swapped-components", m.source, m.target, comps,
                      m.group, m.source_action, m.target_action)
    return check_equivariance(broken, seed=seed)


def _mutant_twist_sign(seed: int, trials: int) -> Certificate:
    pair = link_quotient()
    m = pair.forward
    src = dict(m.source_action)
    for label in ("(1 2)", "(1 2 3)"):
        g = src[label]
        src[label] = ActionGen(perm=g.perm, twist="none", conjugate=g.conjugate,
                               projective=g.projective, scale=g.scale)
    broken = EquivMap("mutation.twist-sign", m.source, m.target, m.components,
                      m.group, src, m.target_action)
    return check_equivariance(broken, seed=seed)


def _mutant_dropped_conjugation(seed: int, trials: int) -> Certificate:
    pair = link_linear()
    m = pair.forward

    def strip(table):
        out = dict(table)
        g = out[GAMMA]
        out[GAMMA] = ActionGen(perm=g.perm, twist=g.twist, conjugate=False,
                               projective=g.projective, scale=g.scale)
        return out

    broken = EquivMap("mutation.dropped-conjugation", m.source, m.target,
                      m.components, m.group, strip(m.source_action),
                      strip(m.target_action))
    return check_equivariance(broken, seed=seed)


def _mutant_wrong_cocycle(seed: int, trials: int) -> Certificate:
    t0 = time.perf_counter()
    cert = Certificate(construction="mutation.wrong-cocycle", seed=seed)
    bad = Cocycle.of({GAMMA: ("(1 2)",)})
    twisted = twist_action(base_torus_group(), bad)
    got = twisted.action(GAMMA)
    want = gamma_twisted_expected("torus")
    ok = _action_tables_match(got, want, seed, 25, True)
    cert.add("twisted-action-table[torus:gamma]", "pass" if ok else "fail",
             "cocycle value is a transposition, not the inversion")
    cert.ms = 1000 * (time.perf_counter() - t0)
    return cert


def _mutant_lattice_offbyone(seed: int, trials: int) -> Certificate:
    t0 = time.perf_counter()
    cert = Certificate(construction="mutation.lattice-offbyone", seed=seed)
    g = [list(r) for r in galois_matrix()]
    g[0][0] += 1
    g = tuple(map(tuple, g))
    cert.add("form-preserved[galois]", "pass" if preserves_form(g) else "fail",
             "bumped entry breaks the pairing")
    cert.add("K-fixed[galois]", "pass" if fixes(g, CANONICAL) else "fail")
    cert.ms = 1000 * (time.perf_counter() - t0)
    return cert


MUTATION_IDS = (
    "mutation.swapped-components",
    "mutation.twist-sign",
    "mutation.dropped-conjugation",
    "mutation.wrong-cocycle",
    "mutation.lattice-offbyone",
)


# -- registry assembly --------------------------------------------------------

def _fill_registry():
    register("classical.gl3", "unit group of the 3x3 matrix algebra",
             lambda s, t: full_linear_certificate(3, s, min(t, 25), name="classical.gl3"))
    register("classical.sp2", "symplectic involution transform, size 2",
             lambda s, t: classical_certificate("classical.sp2", symplectic_alg(2), s, t))
    register("classical.sp4", "symplectic involution transform, size 4",
             lambda s, t: classical_certificate("classical.sp4", symplectic_alg(4), s, t))
    register("classical.so3", "orthogonal involution transform, size 3",
             lambda s, t: classical_certificate("classical.so3", orthogonal_alg(3), s, t))
    register("classical.so21", "orthogonal transform for the (2,1) form",
             lambda s, t: classical_certificate("classical.so21",
                                                orthogonal_alg(3, (1, 1, -1)), s, t))
    register("classical.su3", "Hermitian involution transform over Q(sqrt(-3))",
             lambda s, t: classical_certificate("classical.su3", unitary_alg(3, -3), s, t))
    register("classical.su21", "Hermitian transform for the (2,1) form",
             lambda s, t: classical_certificate("classical.su21",
                                                unitary_alg(3, -3, (1, 1, -1)), s, t))
    register("classical.u3gauss", "Hermitian involution transform over Q(sqrt(-1))",
             lambda s, t: classical_certificate("classical.u3gauss",
                                                unitary_alg(3, -1), s, t))
    register("pgl.2", "projective linear transform, size 2",
             lambda s, t: pgl_certificate(2, s, t, name="pgl.2"))
    register("pgl.3", "projective linear transform, size 3",
             lambda s, t: pgl_certificate(3, s, t, name="pgl.3"))

    register("su3.chain", "five-link equivariant torus chain, unitary rank 2",
             lambda s, t: chain_certificate(seed=s, trials=t))
    register("su3.phi", "difference map into the paired projective planes",
             lambda s, t: phi_certificate(seed=s, trials=t))

    register("rank2.twist", "cocycle-twisted torus actions and embeddings",
             lambda s, t: twist_certificate(seed=s, trials=t))
    register("rank2.pgu3", "quotient-torus isomorphism onto the twisted torus",
             lambda s, t: pgu3_certificate(seed=s, trials=t))
    register("rank2.pgu3.lie", "differential of the quotient-torus isomorphism",
             lambda s, t: pgu3_lie_certificate(seed=s, trials=t))
    register("rank2.g2-base", "pluggable rank-2 base map slot",
             lambda s, t: g2_slot_certificate(seed=s, trials=t))

    register("appendix.conic", "conic parameterization and group law",
             lambda s, t: conic_certificate(seed=s, trials=t))
    register("appendix.X", "triple-product surface membership",
             lambda s, t: x_membership_certificate(seed=s, trials=t))
    register("appendix.Y", "cubic compactification membership",
             lambda s, t: y_membership_certificate(seed=s, trials=min(t, 50)))
    register("appendix.Y.singular", "singular locus of the cubic",
             lambda s, t: y_singular_certificate(seed=s, trials=min(t, 20)))

    register("picard.lattice", "intersection form and symmetry matrices",
             lambda s, t: lattice_certificate(seed=s))
    register("picard.invariants", "invariant sublattice of the full action",
             lambda s, t: invariants_certificate(seed=s))
    register("picard.lines", "the six line classes and their hexagon",
             lambda s, t: lines_certificate(seed=s))
    register("picard.ledger", "self-intersection ledger arithmetic",
             lambda s, t: ledger_certificate(seed=s))

    register("mutation.swapped-components", "fixture: two map components swapped",
             _mutant_swapped_components, fixture=True)
    register("mutation.twist-sign", "fixture: sign twist dropped from an action",
             _mutant_twist_sign, fixture=True)
    register("mutation.dropped-conjugation", "fixture: Galois conjugation dropped",
             _mutant_dropped_conjugation, fixture=True)
    register("mutation.wrong-cocycle", "fixture: cocycle hits the wrong element",
             _mutant_wrong_cocycle, fixture=True)
    register("mutation.lattice-offbyone", "fixture: lattice matrix entry off by one",
             _mutant_lattice_offbyone, fixture=True)


_fill_registry()
