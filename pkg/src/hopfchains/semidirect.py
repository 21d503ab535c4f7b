"""Semidirect product of a bimonoid in comodules with its grading ring.

Given a bimonoid A with braiding coelement gamma and a bimonoid H living
inside the A-comodule category, the semidirect product lives on H (x) A:
the multiplication braids A past H using gamma of the coaction, and the
comultiplication pushes the second H-leg across A with the distributive
law tau_H.  Writing h_(-1) (x) h_(0) for the coaction and Sweedler
subscripts for coproducts:

    (h (x) a) . (h' (x) a') = gamma(a_1, h'_(-1)) h.h'_(0) (x) a_2.a'
    delta(h (x) a) = (h_1 (x) (h_2)_(-1).a_1) (x) ((h_2)_(0) (x) a_2)

Both are law-checked on a validation window as part of construction; the
checks are the executable content of the underlying proposition, not an
optional extra.  The comparison functors translate between comodules
over H inside A-comodules and comodules over the product ring.
"""

from __future__ import annotations

from .laws import (
    Bimonoid, Comodule, Report, check_bialgebra_laws, check_comodule_morphism,
    coelement_braiding, comodule_braiding, plain_swap, same_ring,
    tensor_comodule, unit_comodule,
)
from .linalg import (
    UNIT, UNIT_SPACE, LinMap, SpaceMismatch, Vec, equal_on_window,
    identity_map, pair, split_label, tensor_maps, tensor_space,
)

VALIDATION_WINDOW = 3


class LawViolation(Exception):
    "An algebraic law failed; carries the offending check results."

    def __init__(self, results):
        self.results = results
        super().__init__("; ".join(repr(r) for r in results))


def _require(report):
    bad = [r for r in report if not r.equal]
    if bad:
        raise LawViolation(bad)


class ComoduleBimonoid:
    """A bimonoid whose carrier is a comodule over (A, gamma).

    Construction verifies that all four structure maps are A-comodule
    morphisms and that the bialgebra laws hold for the coelement-induced
    braiding; pass ``validate=False`` only to study how constructions
    fail on illegal input.
    """

    def __init__(self, hopf, comodule, coelement, window=VALIDATION_WINDOW,
                 validate=True):
        if hopf.carrier.name != comodule.carrier.name:
            raise SpaceMismatch("bimonoid and comodule must share a carrier")
        if not same_ring(comodule.ring, coelement.ring):
            raise SpaceMismatch("coelement is for a different ring")
        self.hopf = hopf
        self.comodule = comodule
        self.coelement = coelement
        self.ring = comodule.ring
        self._product = None
        if validate:
            _require(self.morphism_report(window))
            _require(check_bialgebra_laws(hopf, self.braiding(), window))

    def braiding(self):
        return coelement_braiding(self.coelement, [self.comodule])

    def morphism_report(self, K):
        "Are mu, eta, delta, epsilon morphisms of A-comodules?"
        H, com = self.hopf, self.comodule
        hh = tensor_comodule(com, com)
        one = unit_comodule(self.ring)
        return Report([
            check_comodule_morphism(H.mu, hh, com, K),
            check_comodule_morphism(H.eta, one, com, K),
            check_comodule_morphism(H.delta, com, hh, K),
            check_comodule_morphism(H.epsilon, com, one, K),
        ])

    def product(self, window=VALIDATION_WINDOW):
        if self._product is None:
            self._product = semidirect_product(self, window=window)
        return self._product


class SemidirectRing(Bimonoid):
    "The product bimonoid on H (x) A, remembering where it came from."

    def __init__(self, carrier, mu, eta, delta, epsilon, antipode, source):
        super().__init__(carrier, mu, eta, delta, epsilon, antipode)
        self.source = source
        self.hopf = source.hopf
        self.grading = source.ring
        self.coelement = source.coelement


def semidirect_product(HB, window=VALIDATION_WINDOW, check=True):
    """Build H >< A and verify the full bimonoid suite under the plain swap.

    The antipode is attached when both H and A carry one, and both
    antipode identities are part of the verified postcondition.
    """
    H, A = HB.hopf, HB.ring
    gamma = HB.coelement.gamma
    coact = HB.comodule.coaction
    Hs, As = H.carrier, A.carrier
    Q = tensor_space(Hs, As)
    QQ = tensor_space(Q, Q)

    def split_q(label):
        return split_label(Hs, As, label)

    def mu_fn(label):
        lq, lq2 = split_label(Q, Q, label)
        h, a = split_q(lq)
        hp, ap = split_q(lq2)
        out = Vec.zero()
        for a_pair, c1 in A.delta.apply(a).items():
            a_1, a_2 = split_label(As, As, a_pair)
            for m_h0, c2 in coact.apply(hp).items():
                hm, h0 = split_label(As, Hs, m_h0)
                sign = gamma(a_1, hm)
                if not sign:
                    continue
                hh = H.mu.apply(pair(h, h0))
                aa = A.mu.apply(pair(a_2, ap))
                out = out + (c1 * c2 * sign) * hh.tensor(aa)
        return out

    def delta_fn(label):
        h, a = split_q(label)
        out = Vec.zero()
        for h_pair, c1 in H.delta.apply(h).items():
            h_1, h_2 = split_label(Hs, Hs, h_pair)
            for a_pair, c2 in A.delta.apply(a).items():
                a_1, a_2 = split_label(As, As, a_pair)
                for m_h0, c3 in coact.apply(h_2).items():
                    hm, h0 = split_label(As, Hs, m_h0)
                    first = Vec.basis(h_1).tensor(A.mu.apply(pair(hm, a_1)))
                    second = Vec.basis(pair(h0, a_2))
                    out = out + (c1 * c2 * c3) * first.tensor(second)
        return out

    mu = LinMap(QQ, Q, mu_fn, name="mu")
    eta = LinMap(UNIT_SPACE, Q, lambda l: H.eta.apply(UNIT).tensor(A.eta.apply(UNIT)),
                 name="eta")
    delta = LinMap(Q, QQ, delta_fn, name="delta")
    epsilon = LinMap(Q, UNIT_SPACE,
                     lambda l: H.epsilon(Vec.basis(split_q(l)[0]))
                     .tensor(A.epsilon(Vec.basis(split_q(l)[1]))),
                     name="epsilon")

    antipode = None
    if H.antipode is not None and A.antipode is not None:
        antipode = _antipode_map(HB, Q)

    ring = SemidirectRing(Q, mu, eta, delta, epsilon, antipode, HB)
    if check:
        report = check_bialgebra_laws(ring, plain_swap(), window)
        _require(report)
    return ring


def _antipode_map(HB, Q):
    """The antipode composite, read off the product's string diagram.

    Three copies of the coaction output h_(-1) are taken; the first
    multiplies a_1 and is inverted into the A-output, the second
    multiplies a_2 and is inverted into gamma's right slot, the third
    fills gamma's left slot.  The H-output is s_H(h_(0)).
    """
    H, A = HB.hopf, HB.ring
    gamma = HB.coelement.gamma
    coact = HB.comodule.coaction
    Hs, As = H.carrier, A.carrier

    def fn(label):
        h, a = split_label(Hs, As, label)
        out = Vec.zero()
        for m_h0, c0 in coact.apply(h).items():
            hm, h0 = split_label(As, Hs, m_h0)
            sh = H.antipode.apply(h0)
            for uv, c1 in A.delta.apply(hm).items():
                u1, rest = split_label(As, As, uv)
                for vw, c2 in A.delta.apply(rest).items():
                    v1, v2 = split_label(As, As, vw)
                    for aa, c3 in A.delta.apply(a).items():
                        a_1, a_2 = split_label(As, As, aa)
                        outer = A.antipode(A.mu.apply(pair(u1, a_1)))
                        inner = A.antipode(A.mu.apply(pair(v1, a_2)))
                        for w, cw in inner.items():
                            sign = gamma(v2, w)
                            if not sign:
                                continue
                            coeff = c0 * c1 * c2 * c3 * cw * sign
                            out = out + coeff * sh.tensor(outer)
        return out

    return LinMap(Q, Q, fn, name="antipode")


def semidirect_antipode(HB, window=VALIDATION_WINDOW, check=True):
    """The antipode of H >< A, verified against both antipode identities."""
    if HB.hopf.antipode is None or HB.ring.antipode is None:
        raise ValueError("both H and A must carry antipodes")
    ring = HB.product(window)
    s = ring.antipode
    if check:
        idq = identity_map(ring.carrier)
        eta_eps = ring.epsilon >> ring.eta
        report = Report([
            equal_on_window(ring.delta >> tensor_maps(s, idq) >> ring.mu,
                            eta_eps, window, law="antipode-left"),
            equal_on_window(ring.delta >> tensor_maps(idq, s) >> ring.mu,
                            eta_eps, window, law="antipode-right"),
        ])
        _require(report)
    return s


# ---------------------------------------------------------------------------
# comodules over H inside the comodule category, and the comparison functors


class WComodule:
    """A carrier with compatible A- and H-coactions (alpha and chi).

    This is a comodule over H taken inside the category of A-comodules:
    alpha must be a legal A-coaction, chi a legal H-coaction, and chi an
    A-comodule morphism into H (x) B with its tensor coaction.
    """

    def __init__(self, hb, carrier, alpha, chi, window=VALIDATION_WINDOW,
                 validate=True):
        self.hb = hb
        self.carrier = carrier
        self.alpha = alpha
        self.chi = chi
        self.as_comodule = Comodule(hb.ring, carrier, alpha,
                                    check_window=window if validate else None)
        if validate:
            _require(self.legality(window))

    def legality(self, K):
        H = self.hb.hopf
        idb = identity_map(self.carrier)
        report = Report()
        report.append(equal_on_window(
            self.chi >> tensor_maps(H.epsilon, idb), idb, K, law="chi-counit"))
        report.append(equal_on_window(
            self.chi >> tensor_maps(H.delta, idb),
            self.chi >> tensor_maps(identity_map(H.carrier), self.chi),
            K, law="chi-coassociativity"))
        hb_comod = tensor_comodule(self.hb.comodule, self.as_comodule)
        report.append(check_comodule_morphism(
            self.chi, self.as_comodule, hb_comod, K))
        return report

    def __repr__(self):
        return "WComodule(%s)" % self.carrier.name


def tensor_wcomodule(B, C, window=None):
    "Tensor in the braided category: multiply H-legs across the braiding."
    if B.hb is not C.hb:
        raise SpaceMismatch("tensor of comodules over different data")
    hb = B.hb
    H = hb.hopf
    alpha = tensor_comodule(B.as_comodule, C.as_comodule).coaction
    sigma = comodule_braiding(B.as_comodule, hb.comodule, hb.coelement)
    idh = identity_map(H.carrier)
    idb = identity_map(B.carrier)
    idc = identity_map(C.carrier)
    chi = (tensor_maps(B.chi, C.chi)
           >> tensor_maps(tensor_maps(idh, sigma), idc)
           >> tensor_maps(tensor_maps(H.mu, idb), idc))
    carrier = tensor_space(B.carrier, C.carrier)
    return WComodule(hb, carrier, alpha, chi,
                     window=window, validate=window is not None)


def comparison_f(B, window=VALIDATION_WINDOW):
    """F: comodules over H in A-comodules -> comodules over H >< A.

    The coaction is (1_H (x) alpha) . chi; the underlying map of a
    morphism is untouched.  The result is checked legal over the product.
    """
    ring = B.hb.product()
    idh = identity_map(B.hb.hopf.carrier)
    coaction = B.chi >> tensor_maps(idh, B.alpha)
    return Comodule(ring, B.carrier, coaction, check_window=window)


def comparison_f_inverse(X, window=VALIDATION_WINDOW, validate=True):
    """F^{-1}: recover (alpha, chi) by killing the other leg's counit."""
    ring = X.ring
    if not isinstance(ring, SemidirectRing):
        raise SpaceMismatch("expected a comodule over a semidirect ring")
    hb = ring.source
    H, A = hb.hopf, hb.ring
    idb = identity_map(X.carrier)
    ida = identity_map(A.carrier)
    idh = identity_map(H.carrier)
    alpha = X.coaction >> tensor_maps(tensor_maps(H.epsilon, ida), idb)
    chi = X.coaction >> tensor_maps(tensor_maps(idh, A.epsilon), idb)
    return WComodule(hb, X.carrier, alpha, chi, window=window, validate=validate)
