"""Property suites and their report.

Every check runs a predicate over reproducible samples and stops at the first
failing case, which is kept as the witness together with the seed.
"""
from dataclasses import asdict, dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Union
import logging

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
import seaborn as sns

from inversive_geometry import linalg
from inversive_geometry.cycles import (
    Cycle,
    CycleKind,
    Finite,
    Infinity,
    all_cycles,
    all_vpoints,
    center_and_size,
    classify,
    evaluate,
    gram_matrix,
    on_zero_set,
    pairing,
    point_embed,
    point_extract,
    proj_equiv,
    zero_set,
)
from inversive_geometry.errors import (
    DependentCycles,
    InversiveGeometryError,
    NotEnoughSamples,
    SingularPencil,
    UnknownSuite,
    ZeroFunction,
)
from inversive_geometry.field_core import Field, FieldKind, parse_field
from inversive_geometry.lorentz import (
    lorentz_product,
    stereo_from_cycle,
    stereo_to_cycle,
    u_to_v,
)
from inversive_geometry.ninepoint import (
    Line,
    OrthoConfig,
    PlanePoint,
    induced_involutions,
    nine_point_circle,
    orthic_pencil,
    restrict_to_line,
    sample_configurations,
)
from inversive_geometry.pencils import (
    Pencil,
    PencilClass,
    classify_pencil,
    common_zeros,
    conjugate,
    orthocomplement,
)
from inversive_geometry.projline import (
    BinaryQuadric,
    cycle_from_quadric,
    desargues_condition,
    desargues_involution,
    line_pairing,
    line_space,
    polar_involution,
    quadric_from_cycle,
    word_to_moebius,
)
from inversive_geometry.quad_space import DEFAULT_BUDGET, QuadSpace, dot, norm_h
from inversive_geometry.sampling import (
    DEFAULT_SEED,
    Sampler,
    norm_form_space,
    proven_spaces,
    standard_space,
)
from inversive_geometry.transforms import (
    InversiveWord,
    Reflection,
    affine_reflect,
    as_matrix,
    invert_point,
    isotropic_frame,
    map_pair_to_pair,
    reflect,
    reflect_point,
    translation_word,
)

plt.style.use("fivethirtyeight")

logger = logging.getLogger(__name__)

DEFAULT_COUNT = 100
EXHAUSTIVE_LIMIT = 10 ** 5


@dataclass(frozen=True)
class CheckResult:
    name: str
    field: str
    seed: int
    passed: bool
    witness: Optional[str] = None
    detail: str = ""


class VerdictReport:
    """Results of one or more checks, ordered by check name then seed."""

    def __init__(self, results: Iterable[CheckResult] = ()):
        self._results: List[CheckResult] = list(results)

    def add(self, result: CheckResult):
        self._results.append(result)

    def extend(self, results: Iterable[CheckResult]):
        self._results.extend(results)

    @property
    def results(self) -> List[CheckResult]:
        return sorted(self._results, key=lambda r: (r.name, r.seed))

    def __len__(self):
        return len(self._results)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self._results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def as_pd_dataframe(self) -> pd.DataFrame:
        """One row per check."""
        columns = ["name", "field", "seed", "passed", "witness", "detail"]
        return pd.DataFrame([asdict(r) for r in self.results], columns=columns)

    def to_jsonl(self) -> str:
        """One JSON object per line."""
        if not self._results:
            return ""
        return self.as_pd_dataframe().to_json(orient="records", lines=True)

    def summary(self) -> str:
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            line = "{} {} [{} seed={}] {}".format(status, r.name, r.field, r.seed, r.detail).rstrip()
            if not r.passed and r.witness is not None:
                line += "\n    witness: {}".format(r.witness)
            lines.append(line)
        total, failed = len(self._results), len(self.failures)
        lines.append("{} checks, {} passed, {} failed".format(total, total - failed, failed))
        return "\n".join(lines)

    def plot(self, *args, **kwargs):
        """Barplot of passing and failing checks per check family."""
        df_plot = self.as_pd_dataframe()
        df_plot["family"] = df_plot["name"].str.split("[", n=1).str[0]
        df_plot["status"] = np.where(df_plot["passed"], "pass", "fail")
        df_plot = df_plot.groupby(["family", "status"]).size().reset_index(name="checks")

        fig, ax = plt.subplots(figsize=(20, 7))
        ax = sns.barplot(data=df_plot, x="family", y="checks", hue="status", ax=ax, *args, **kwargs)
        plt.xticks(rotation=45, ha="right")
        ax.legend(loc="upper left", frameon=True, fancybox=True)
        ax.grid(color="gray", linestyle=":", linewidth=1, axis="y")
        ax.set_frame_on(False)
        plt.tight_layout()
        return ax


def check(name: str, field, seed: int, samples: Iterable[Sequence], predicate: Callable[..., bool]) -> CheckResult:
    """Evaluate ``predicate(*sample)`` on each sample; the first failure is the witness.

    Domain errors raised by the predicate count as failures.
    """
    cases = 0
    for sample in samples:
        cases += 1
        detail = ""
        try:
            ok = bool(predicate(*sample))
        except (InversiveGeometryError, ZeroDivisionError) as exc:
            ok = False
            detail = "{}: {}".format(type(exc).__name__, exc)
        if not ok:
            witness = "; ".join(str(x) for x in sample)
            logger.info("check %s failed on %s", name, witness)
            return CheckResult(name, str(field), seed, False, witness, detail or "case {}".format(cases))
    return CheckResult(name, str(field), seed, True, None, "{} cases".format(cases))


def _label(name: str, space: QuadSpace) -> str:
    return "{}[{}]".format(name, ",".join(str(d) for d in space.diag))


def _points(sampler: Sampler, count: int):
    """Every point of a finite V, else ``count`` sampled points."""
    if sampler.field.is_finite:
        return all_vpoints(sampler.space)
    return [sampler.vpoint() for _ in range(count)]


def _mirrors(sampler: Sampler, count: int, n_points: int):
    """Line mirrors and nonzero-size circle mirrors.

    Over a finite field every mirror is used when mirrors times points stays within
    EXHAUSTIVE_LIMIT; otherwise ``count`` of each are sampled (a tenth over finite fields).
    """
    space, field = sampler.space, sampler.field
    if field.is_finite:
        if field.p ** (space.dim + 1) * n_points <= EXHAUSTIVE_LIMIT:
            lines, circles = [], []
            for p in all_cycles(space):
                kind = classify(p)
                if kind.kind is CycleKind.LINE:
                    lines.append(p)
                elif kind.kind is CycleKind.CIRCLE and not kind.zero_size:
                    circles.append(p)
            return lines, circles
        logger.debug("too many mirrors over %s to exhaust, sampling", space)
        count = max(1, count // 10)
    return (
        [sampler.line() for _ in range(count)],
        [sampler.circle(nonzero_size=True) for _ in range(count)],
    )


def _combination(space: QuadSpace, coefficients, cycles) -> Optional[Cycle]:
    coords = [space.field.zero] * (space.dim + 2)
    for k, p in zip(coefficients, cycles):
        coords = [x + k * y for x, y in zip(coords, p.coords)]
    try:
        return Cycle.from_coords(space, coords)
    except ZeroFunction:
        return None


def _cycle_through(sampler: Sampler, v) -> Cycle:
    """A random cycle vanishing at v."""
    space = sampler.space
    if v.is_infinity:
        return sampler.line()
    while True:
        a, b = sampler.element(), sampler.vector()
        if a.is_zero and b.is_zero:
            continue
        return Cycle(space, a, b, -(a * norm_h(space, v.vector) + dot(space, b, v.vector)))


###########################
##### field arithmetic ####
###########################


def suite_field(field: Field, seed: int, count: int, budget: int) -> List[CheckResult]:
    sampler = Sampler(standard_space(field, 1), seed)
    triples = [(sampler.element(), sampler.element(), sampler.element()) for _ in range(count)]

    def axioms(a, b, c):
        return (
            (a + b) + c == a + (b + c)
            and (a * b) * c == a * (b * c)
            and a * (b + c) == a * b + a * c
            and (a + (-a)).is_zero
            and (a.is_zero or a * a.inverse() == field.one)
        )

    def squares(a, b, c):
        square = a * a
        root = field.sqrt_exact(square)
        if not field.is_square(square) or root is None or root * root != square:
            return False
        root_b = field.sqrt_exact(b)
        return field.is_square(b) == (root_b is not None) and (root_b is None or root_b * root_b == b)

    results = [
        check("field.axioms", field, seed, triples, axioms),
        check("field.squares", field, seed, triples, squares),
    ]
    if field.is_ordered:

        def ordering(a, b, c):
            sign = field.sign
            translation = sign(b - a) < 0 or sign((b + c) - (a + c)) >= 0
            product = sign(a) < 0 or sign(b) < 0 or sign(a * b) >= 0
            return sign(a * a) in (0, 1) and translation and product

        results.append(check("field.ordering", field, seed, triples, ordering))
    return results


##########################
##### cycle pairing ######
##########################


def suite_pairing(field: Field, seed: int, count: int, budget: int) -> List[CheckResult]:
    results = []
    for space in proven_spaces(field):
        s = Sampler(space, seed)
        gram = gram_matrix(space)

        def bilinear(p, q, r, alpha):
            gram_form = p.as_vector() @ gram @ q.as_vector()
            combo = _combination(space, (alpha, 1), (p, q))
            expected = alpha * pairing(p, r) + pairing(q, r)
            return gram_form == pairing(p, q) and (combo is None or pairing(combo, r) == expected)

        def lines(p, q):
            return pairing(p, q) == dot(space, p.b, q.b)

        def circle_line(p, q):
            center = center_and_size(p).center
            through = Cycle(space, 0, q.b, -dot(space, q.b, center))
            return (
                pairing(p, q).is_zero == evaluate(q, center).is_zero
                and pairing(p, through).is_zero
            )

        def circle_pairs(p, q):
            m, s1 = center_and_size(p)
            n, s2 = center_and_size(q)
            return pairing(p, q) == 2 * p.a * q.a * (s1 + s2 - norm_h(space, m - n))

        def isotropy(p):
            kind = classify(p)
            expected = kind.kind is CycleKind.CONSTANT or kind.zero_size
            return pairing(p, p).is_zero == expected

        def embedding(v, p):
            q = point_embed(space, v)
            return (
                point_extract(q) == v
                and pairing(q, q).is_zero
                and proj_equiv(point_embed(space, point_extract(p)), p)
            )

        def zero_set_agrees(p, v):
            return on_zero_set(p, v) == pairing(p, point_embed(space, v)).is_zero

        def isotropic_cycle():
            v = s.vpoint()
            return point_embed(space, v) * s.nonzero()

        pairs = [(s.cycle(), s.cycle()) for _ in range(count)]
        results += [
            check(_label("pairing.symmetry", space), field, seed, pairs,
                  lambda p, q: pairing(p, q) == pairing(q, p)),
            check(_label("pairing.bilinear", space), field, seed,
                  [(s.cycle(), s.cycle(), s.cycle(), s.element()) for _ in range(count)], bilinear),
            check(_label("pairing.nondegenerate", space), field, seed, [()],
                  lambda: not linalg.determinant(field, gram).is_zero),
            check(_label("pairing.lines", space), field, seed,
                  [(s.line(), s.line()) for _ in range(count)], lines),
            check(_label("pairing.circle-line", space), field, seed,
                  [(s.circle(), s.line()) for _ in range(count)], circle_line),
            check(_label("pairing.circles", space), field, seed,
                  [(s.circle(), s.circle()) for _ in range(2 * count)], circle_pairs),
            check(_label("pairing.isotropy", space), field, seed,
                  [(s.cycle(),) for _ in range(5 * count)], isotropy),
            check(_label("pairing.embedding", space), field, seed,
                  [(s.vpoint(), isotropic_cycle()) for _ in range(count)], embedding),
            check(_label("pairing.zero-set", space), field, seed,
                  [(s.cycle(), v) for v in _points(s, count)], zero_set_agrees),
        ]
        if field.is_ordered and all(field.sign(d) > 0 for d in space.diag):

            def imaginary_circle():
                a, m = s.nonzero(), s.vector()
                k = s.element()
                k = k * k + 1
                # a ((X - m).(X - m) + k) has size -k
                return Cycle(space, a, m * (-2 * a), a * (norm_h(space, m) + k))

            results.append(
                check(_label("pairing.ordered", space), field, seed,
                      [(imaginary_circle(), imaginary_circle()) for _ in range(count)],
                      lambda p, q: not pairing(p, q).is_zero)
            )
    return results


###############################
##### reflections on V ########
###############################


def suite_reflect_equiv(field: Field, seed: int, count: int, budget: int) -> List[CheckResult]:
    results = []
    for space in proven_spaces(field):
        s = Sampler(space, seed)
        points = _points(s, 20)
        line_mirrors, circle_mirrors = _mirrors(s, count, len(points))

        def through_center(p, x):
            center = center_and_size(p).center
            shifted = Cycle(space, x.a, x.b, x.c - evaluate(x, center))
            for y in (x, shifted):
                image = reflect(p, y).a.is_zero
                if image != evaluate(y, center).is_zero:
                    return False
            return True

        def conformal(p, q, v):
            return on_zero_set(reflect(p, q), reflect_point(p, v))

        def transitivity(u, w, u2, w2):
            word = map_pair_to_pair(space, u, w, u2, w2)
            return len(word) <= 4 and word.apply_point(u) == u2 and word.apply_point(w) == w2

        def matrices(word, v):
            m = as_matrix(word)
            return m.orthogonal and m.apply_point(v) == word.apply_point(v)

        frame = isotropic_frame(space)

        def fixes_frame(m):
            return all(m.fixes_point(v) for v in frame)

        def faithful(word, extra):
            m = as_matrix(word)
            return fixes_frame(m) and all(m.fixes_point(v) for v in extra)

        def faithful_if_framed(word, extra):
            m = as_matrix(word)
            if not fixes_frame(m):
                return True
            return all(m.fixes_point(v) for v in extra)

        def random_word(length):
            return InversiveWord(space, tuple(Reflection(s.non_isotropic()) for _ in range(length)))

        def conformal_case():
            v = s.vpoint()
            return (s.non_isotropic(), _cycle_through(s, v), v)

        def framed_case():
            # translations by t, u and -(t + u) between a random word and its reverse
            t, u = s.nonzero_vector(), s.nonzero_vector()
            g = random_word(2)
            loop = translation_word(space, t) + translation_word(space, u) + translation_word(space, -(t + u))
            return (g + loop + g.inverse(), [s.vpoint() for _ in range(50)])

        def sampled_case():
            length = int(s.rng.integers(1, 5))
            return (random_word(length), [s.vpoint() for _ in range(50)])

        lines = [(p, v) for p in line_mirrors for v in points]
        circles = [(p, v) for p in circle_mirrors for v in points]
        results += [
            check(_label("reflect.lines", space), field, seed, lines,
                  lambda p, v: reflect_point(p, v) == affine_reflect(p, v)),
            check(_label("reflect.circles", space), field, seed, circles,
                  lambda p, v: reflect_point(p, v) == invert_point(p, v)),
            check(_label("reflect.line-images", space), field, seed,
                  [(s.circle(nonzero_size=True), s.circle()) for _ in range(count)], through_center),
            check(_label("reflect.involution", space), field, seed,
                  [(s.non_isotropic(), s.cycle()) for _ in range(count)],
                  lambda p, x: reflect(p, reflect(p, x)) == x),
            check(_label("reflect.conformal", space), field, seed,
                  [conformal_case() for _ in range(count)], conformal),
            check(_label("reflect.transitivity", space), field, seed,
                  [tuple(s.distinct_vpoints(2) + s.distinct_vpoints(2)) for _ in range(count)],
                  transitivity),
            check(_label("reflect.matrices", space), field, seed,
                  [(random_word(3), s.vpoint()) for _ in range(max(1, count // 5))], matrices),
            check(_label("reflect.faithful", space), field, seed,
                  [framed_case() for _ in range(max(2, count // 5))], faithful),
            check(_label("reflect.faithful-sampled", space), field, seed,
                  [sampled_case() for _ in range(max(2, count // 5))], faithful_if_framed),
        ]
    return results


#################
##### pencils ###
#################


def suite_pencils(field: Field, seed: int, count: int, budget: int) -> List[CheckResult]:
    results = []
    for space in proven_spaces(field):
        s = Sampler(space, seed)

        def pencil_case(k):
            if k % 3 == 0:
                return (s.cycle(), s.cycle())
            v = s.vpoint()
            if k % 3 == 1:
                return (point_embed(space, v), _cycle_through(s, v))
            w = s._until(s.vpoint, lambda w: w != v, "second point")
            return (point_embed(space, v), point_embed(space, w))

        def in_pencil(p, q, v):
            return linalg.rank(field, [p.coords, q.coords, point_embed(space, v).coords]) == 2

        def consistency(p, q):
            try:
                pencil = Pencil(p, q)
            except DependentCycles:
                return True
            kind = classify_pencil(pencil)
            zeros = common_zeros(pencil, budget)
            if kind is PencilClass.REGULAR_ARTINIAN:
                # the two points of V lying in the pencil
                if len(zeros) != 2 or zeros[0] == zeros[1]:
                    return False
                if not all(in_pencil(p, q, v) for v in zeros):
                    return False
                if field.is_finite:
                    return set(zeros) == {v for v in all_vpoints(space) if in_pencil(p, q, v)}
                return True
            if kind is PencilClass.SINGULAR and len(zeros) != 1:
                return False
            if not all(on_zero_set(p, v) and on_zero_set(q, v) for v in zeros):
                return False
            if field.is_finite:
                return set(zeros) == {v for v in all_vpoints(space) if on_zero_set(p, v) and on_zero_set(q, v)}
            return True

        cases = [pencil_case(k) for k in range(count)]
        results.append(check(_label("pencils.consistency", space), field, seed, cases, consistency))
        if space.dim == 1:

            def duality(p, q):
                try:
                    pencil = Pencil(p, q)
                except DependentCycles:
                    return True
                (r,) = orthocomplement(space, [p, q])
                kind = classify_pencil(pencil)
                norm = pairing(r, r)
                if norm.is_zero:
                    return kind is PencilClass.SINGULAR
                # det G = -4 d_1 = det(gram2) <r,r> up to squares, so -det(gram2) ~ d_1 <r,r>
                if field.is_square(space.diag[0] * norm):
                    return kind is PencilClass.REGULAR_ARTINIAN
                return kind is PencilClass.REGULAR_ANISOTROPIC

            results.append(check(_label("pencils.duality", space), field, seed, cases, duality))
    return results


###########################
##### conjugate points ####
###########################


def suite_conjugate(field: Field, seed: int, count: int, budget: int) -> List[CheckResult]:
    results = []
    for space in proven_spaces(field):
        s = Sampler(space, seed)

        def certificate(p, m):
            result = conjugate(p, m)
            if result.certificate is None:
                return result.point == m
            alpha, beta = result.certificate
            span = _combination(space, (alpha, beta), (point_embed(space, m), point_embed(space, result.point)))
            return span == p

        def converse(m, m2, alpha, beta):
            p = _combination(space, (alpha, beta), (point_embed(space, m), point_embed(space, m2)))
            if p is None or pairing(p, p).is_zero:
                return True
            return reflect_point(p, m) == m2

        def orthogonal_combination(cycles):
            basis = orthocomplement(space, cycles)
            while True:
                v = _combination(space, [s.element() for _ in basis], basis)
                if v is not None:
                    return v

        def through_pair(u, m):
            m2 = conjugate(u, m).point
            if m2 == m:
                return True
            v = orthogonal_combination([point_embed(space, m), point_embed(space, m2)])
            return on_zero_set(v, m) and on_zero_set(v, m2) and pairing(u, v).is_zero

        def propagation(u, m):
            v = orthogonal_combination([u, point_embed(space, m)])
            return on_zero_set(v, m) and on_zero_set(v, conjugate(u, m).point)

        results += [
            check(_label("conjugate.certificate", space), field, seed,
                  [(s.non_isotropic(), s.vpoint()) for _ in range(count)], certificate),
            check(_label("conjugate.converse", space), field, seed,
                  [tuple(s.distinct_vpoints(2)) + (s.nonzero(), s.nonzero()) for _ in range(count)],
                  converse),
            check(_label("conjugate.orthogonality", space), field, seed,
                  [(s.non_isotropic(), s.vpoint()) for _ in range(count)], through_pair),
            check(_label("conjugate.propagation", space), field, seed,
                  [(s.non_isotropic(), s.vpoint()) for _ in range(count)], propagation),
        ]
    return results


########################
##### stereographic ####
########################


def suite_stereo(field: Field, seed: int, count: int, budget: int) -> List[CheckResult]:
    results = []
    for space in proven_spaces(field):
        s = Sampler(space, seed)

        def linear(t, u, alpha):
            combo = t * alpha + u
            if combo.is_zero:
                return True
            expected = _combination(space, (alpha, 1), (stereo_to_cycle(t), stereo_to_cycle(u)))
            return stereo_to_cycle(combo) == expected

        def isotropic(v, alpha):
            t = stereo_from_cycle(point_embed(space, v)) * alpha
            return u_to_v(t) == v == point_extract(stereo_to_cycle(t))

        results += [
            check(_label("stereo.isometry", space), field, seed,
                  [(s.lorentz_vector(), s.lorentz_vector()) for _ in range(2 * count)],
                  lambda t, u: lorentz_product(t, u) == pairing(stereo_to_cycle(t), stereo_to_cycle(u))),
            check(_label("stereo.linear", space), field, seed,
                  [(s.lorentz_vector(), s.lorentz_vector(), s.nonzero()) for _ in range(count)], linear),
            check(_label("stereo.round-trip", space), field, seed,
                  [(s.lorentz_vector(),) for _ in range(count)],
                  lambda t: stereo_from_cycle(stereo_to_cycle(t)) == t),
            check(_label("stereo.isotropic", space), field, seed,
                  [(s.vpoint(), s.nonzero()) for _ in range(count)], isotropic),
        ]
    return results


#######################
##### the line ########
#######################


def suite_projline(field: Field, seed: int, count: int, budget: int) -> List[CheckResult]:
    space = line_space(field)
    s = Sampler(space, seed)

    def polar_is_reflection(q, points):
        involution = polar_involution(q)
        mirror = cycle_from_quadric(q)
        return all(involution.apply(v) == reflect_point(mirror, v) for v in points)

    def polar_is_desargues(q):
        q0, q1 = [quadric_from_cycle(r) for r in orthocomplement(space, [cycle_from_quadric(q)])]
        return desargues_involution(q0, q1) == polar_involution(q)

    def swaps(q0, q1):
        try:
            involution = desargues_involution(q0, q1)
        except SingularPencil:
            return not desargues_condition(q0, q1)
        for k in range(-3, 4):
            try:
                member = q0 + q1 * k
            except ZeroFunction:
                continue
            roots = member.roots()
            if len(roots) == 2 and involution.apply(roots[0]) != roots[1]:
                return False
        return True

    def words(word, points):
        moebius = word_to_moebius(word)
        return all(moebius.apply(v) == word.apply_point(v) for v in points)

    def singular_case():
        v = s.vpoint()
        return (quadric_from_cycle(point_embed(space, v)), quadric_from_cycle(_cycle_through(s, v)))

    def fails(q0, q1):
        try:
            desargues_involution(q0, q1)
        except SingularPencil:
            return True
        return False

    def random_word():
        length = int(s.rng.integers(1, 4))
        return InversiveWord(space, tuple(Reflection(s.non_isotropic()) for _ in range(length)))

    return [
        check("projline.polar-reflection", field, seed,
              [(s.quadric(proper=True), [s.vpoint() for _ in range(10)]) for _ in range(count)],
              polar_is_reflection),
        check("projline.polar-desargues", field, seed,
              [(s.quadric(proper=True),) for _ in range(count)], polar_is_desargues),
        check("projline.desargues-swaps", field, seed,
              [(s.quadric(), s.quadric()) for _ in range(count)], swaps),
        check("projline.words", field, seed,
              [(random_word(), [s.vpoint() for _ in range(10)]) for _ in range(count)], words),
        check("projline.singular-pencil", field, seed,
              [singular_case() for _ in range(max(1, count // 5))], fails),
    ]


############################
##### nine-point circle ####
############################


def suite_ninepoint(field: Field, seed: int, count: int, budget: int) -> List[CheckResult]:
    results = []
    if field.kind is FieldKind.RATIONALS:

        def worked_example():
            cfg = OrthoConfig.from_triangle(
                PlanePoint(field, 0, 0), PlanePoint(field, 4, 0), PlanePoint(field, 1, 3)
            )
            circle = nine_point_circle(cfg)
            center, size = center_and_size(circle)
            return (
                cfg.T == PlanePoint(field, 1, 1)
                and center.coords == (field("3/2"), field(1))
                and size == field("5/4")
            )

        results.append(check("ninepoint.example", field, seed, [()], worked_example))

    try:
        configurations = sample_configurations(field, seed, min(count, 50) if field.is_finite else count)
    except NotEnoughSamples as exc:
        return results + [CheckResult("ninepoint.sampling", str(field), seed, False, None, str(exc))]
    infinity = Line.at_infinity(field)

    def incidence(cfg):
        try:
            circle = nine_point_circle(cfg)
        except NotEnoughSamples:
            logger.debug("too few nondegenerate conics for %s over %s", cfg, field)
            return True
        return not circle.a.is_zero

    def pencil_shape(cfg):
        for conic in orthic_pencil(cfg):
            A, _, C = conic.coefficients[:3]
            if A != -C or not all(conic.contains(x) for x in (cfg.M, cfg.N, cfg.P, cfg.T)):
                return False
        return True

    def orthogonality(cfg, alpha, beta):
        try:
            circle = nine_point_circle(cfg)
        except NotEnoughSamples:
            return True
        q0, q1 = orthic_pencil(cfg)
        at_infinity = BinaryQuadric(field, circle.a, 0, circle.a)
        try:
            member = restrict_to_line(q0.combine(q1, alpha, beta), infinity)
        except (ZeroFunction, InversiveGeometryError):
            return True
        return line_pairing(at_infinity, member).is_zero

    def involutions(cfg):
        q0, q1 = orthic_pencil(cfg)
        try:
            polar, desargues = induced_involutions(q0, q1, infinity)
        except NotEnoughSamples:
            return True
        return polar == desargues

    s = Sampler(standard_space(field, 1), seed)
    results += [
        check("ninepoint.incidence", field, seed, [(c,) for c in configurations], incidence),
        check("ninepoint.pencil-shape", field, seed, [(c,) for c in configurations], pencil_shape),
        check("ninepoint.orthogonality", field, seed,
              [(c, s.element(), s.element()) for c in configurations], orthogonality),
        check("ninepoint.involutions", field, seed, [(c,) for c in configurations], involutions),
    ]
    return results


#####################
##### zero sets #####
#####################


def suite_zero_sets(field: Field, seed: int, count: int, budget: int) -> List[CheckResult]:
    """Zero-set sizes over F_p: p + 1 for lines (with inf) and nonempty circles, 1 for zero circles."""
    if not field.is_finite:
        logger.info("zero-set counts are checked over finite fields only")
        return []
    space = norm_form_space(field)
    s = Sampler(space, seed)
    p = field.p

    def line_count(line):
        return len(zero_set(line)) == p + 1

    def circle_count(circle):
        zeros = zero_set(circle)
        if classify(circle).zero_size:
            return len(zeros) == 1
        return not zeros or (len(zeros) == p + 1 and Infinity() not in zeros)

    def zero_circle(v, a):
        return zero_set(point_embed(space, v) * a) == [v]

    return [
        check("zero-sets.lines", field, seed, [(s.line(),) for _ in range(count)], line_count),
        check("zero-sets.circles", field, seed, [(s.circle(),) for _ in range(count)], circle_count),
        check("zero-sets.zero-circles", field, seed,
              [(Finite(s.vector()), s.nonzero()) for _ in range(count)], zero_circle),
    ]


SUITES: Dict[str, Callable[[Field, int, int, int], List[CheckResult]]] = {
    "field": suite_field,
    "pairing": suite_pairing,
    "reflect-equiv": suite_reflect_equiv,
    "pencils": suite_pencils,
    "conjugate": suite_conjugate,
    "stereo": suite_stereo,
    "projline": suite_projline,
    "ninepoint": suite_ninepoint,
    "zero-sets": suite_zero_sets,
}


def verify(
    suite: str,
    field: Union[str, Field],
    seed: int = DEFAULT_SEED,
    count: int = DEFAULT_COUNT,
    budget: int = DEFAULT_BUDGET,
) -> VerdictReport:
    """Run one named suite, or every suite for "all"."""
    if suite != "all" and suite not in SUITES:
        raise UnknownSuite("unknown suite {!r}; choose from {}".format(suite, ", ".join(["all"] + list(SUITES))))
    if isinstance(field, str):
        field = parse_field(field)
    names = list(SUITES) if suite == "all" else [suite]
    report = VerdictReport()
    for name in names:
        logger.info("running suite %s over %s (seed=%d, count=%d)", name, field, seed, count)
        report.extend(SUITES[name](field, seed, count, budget))
    return report
