"""Line-oriented scene files.

    # comment
    field Q
    space diag 1 1            (or: space Fp:7 diag 1 -3)
    cycle c1 = a=1 b=0,0 c=-1
    cycle c2 = 1 | 0 0 | -4
    cycle c3 = poly 1 0 -1    (dimension 1: x^2 - 1)
    point p1 = 2,3            (or: inf)
    triangle t = 0,0 4,0 1,3
    op reflect c1 p1 as p2
    op compose c1 c2          (matrix rows separated by ";")

Declarations run in order. Every ``op`` adds one check to the scene's report;
domain errors fail that check and name the operation.
"""
from typing import Callable, Dict, List, Optional, Tuple, Union
import logging

from inversive_geometry.cycles import (
    Cycle,
    Finite,
    Infinity,
    VPoint,
    center_and_size,
    classify,
    evaluate,
    format_cycle,
    pairing,
    point_embed,
    zero_set,
    zero_set_nonempty,
)
from inversive_geometry.errors import InversiveGeometryError, ParseError
from inversive_geometry.field_core import Field, parse_field
from inversive_geometry.lorentz import stereo_from_cycle
from inversive_geometry.ninepoint import (
    OrthoConfig,
    PlanePoint,
    nine_point_circle,
    nine_points,
)
from inversive_geometry.pencils import Pencil, classify_pencil, common_zeros, conjugate
from inversive_geometry.quad_space import DEFAULT_BUDGET, AnisotropyStatus, QuadSpace
from inversive_geometry.transforms import (
    InversiveWord,
    affine_reflect,
    as_matrix,
    invert_point,
    reflect,
    reflect_point,
)
from inversive_geometry.verify import CheckResult, VerdictReport

logger = logging.getLogger(__name__)

Drawable = Union[Cycle, VPoint]


########################
##### literal syntax ###
########################


def parse_space(text: str, field: Optional[Field] = None) -> QuadSpace:
    """``[FIELD] diag d1 ... dn``; the field defaults to ``field`` or Q."""
    tokens = text.split()
    if tokens and tokens[0] != "diag":
        field = parse_field(tokens.pop(0))
    if not tokens or tokens[0] != "diag" or len(tokens) < 2:
        raise ValueError("expected 'diag d1 ... dn', got {!r}".format(text))
    field = field or parse_field("Q")
    return QuadSpace(field, tuple(field(d) for d in tokens[1:]))


def parse_cycle(space: QuadSpace, text: str) -> Cycle:
    """``a=.. b=x,y c=..``, ``a | b1 .. bn | c`` or, in dimension 1, ``poly A B C``."""
    field = space.field
    text = text.strip()
    if text.startswith("poly"):
        coefficients = text.split()[1:]
        if space.dim != 1 or len(coefficients) != 3:
            raise ValueError("'poly A B C' needs a space of dimension 1")
        a, b, c = (field(x) for x in coefficients)
        return Cycle(space, a, (b,), c)
    if "|" in text:
        parts = [part.split() for part in text.split("|")]
        if len(parts) != 3 or len(parts[0]) != 1 or len(parts[2]) != 1:
            raise ValueError("expected 'a | b1 ... bn | c', got {!r}".format(text))
        return Cycle(space, field(parts[0][0]), tuple(field(x) for x in parts[1]), field(parts[2][0]))
    values = {}
    for token in text.split():
        key, sep, value = token.partition("=")
        if not sep or key not in ("a", "b", "c"):
            raise ValueError("unexpected token {!r} in cycle".format(token))
        values[key] = value
    if set(values) != {"a", "b", "c"}:
        raise ValueError("a cycle needs a=, b= and c=")
    b = tuple(field(x) for x in values["b"].split(","))
    return Cycle(space, field(values["a"]), b, field(values["c"]))


def parse_point(space: QuadSpace, text: str) -> VPoint:
    """``inf`` or comma-separated coordinates."""
    text = text.strip()
    if text == "inf":
        return Infinity()
    return Finite.of(space, [space.field(x) for x in text.split(",")])


def format_point(v: VPoint) -> str:
    return str(v)


#################
##### scene #####
#################


class Scene:
    """The objects of a scene file and the report of its operations.

    Parameters:
    budget = search height for zero sets and pencil zeros over infinite fields
    """

    def __init__(self, budget: int = DEFAULT_BUDGET):
        self.budget = budget
        self.field: Optional[Field] = None
        self.space: Optional[QuadSpace] = None
        self.cycles: Dict[str, Cycle] = {}
        self.points: Dict[str, VPoint] = {}
        self.triangles: Dict[str, OrthoConfig] = {}
        self.outputs: List[str] = []
        self.results: List[Tuple[str, Drawable]] = []
        self.report = VerdictReport()
        self._ops: Dict[str, Callable[[List[str]], Tuple[str, Optional[Drawable]]]] = {
            "reflect": self._op_reflect,
            "invert": self._op_invert,
            "affine": self._op_affine,
            "classify": self._op_classify,
            "center": self._op_center,
            "pairing": self._op_pairing,
            "zeros": self._op_zeros,
            "pencil": self._op_pencil,
            "conjugate": self._op_conjugate,
            "stereo": self._op_stereo,
            "embed": self._op_embed,
            "evaluate": self._op_evaluate,
            "ninepoint": self._op_ninepoint,
            "compose": self._op_compose,
        }

    ##### declarations #####

    def run_line(self, text: str, number: int):
        text = text.split("#", 1)[0].strip()
        if not text:
            return
        directive, _, rest = text.partition(" ")
        rest = rest.strip()
        try:
            if directive == "field":
                self.field = parse_field(rest)
                self.space = None
            elif directive == "space":
                self.space = parse_space(rest, self.field)
                self.field = self.space.field
                if self.space.status is not AnisotropyStatus.PROVEN:
                    logger.warning("anisotropy of %s is %s", self.space, self.space.status.value)
            elif directive == "cycle":
                name, value = self._assignment(rest)
                self.cycles[name] = parse_cycle(self._require_space(), value)
            elif directive == "point":
                name, value = self._assignment(rest)
                self.points[name] = parse_point(self._require_space(), value)
            elif directive == "triangle":
                name, value = self._assignment(rest)
                self._declare_triangle(name, value.split(), number)
            elif directive == "op":
                self._run_op(rest, number)
            else:
                raise ParseError("unknown directive {!r}".format(directive), number)
        except ParseError as exc:
            if exc.line is None:
                raise ParseError(str(exc), number) from exc
            raise
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), number) from exc

    @staticmethod
    def _assignment(text: str) -> Tuple[str, str]:
        name, sep, value = text.partition("=")
        name = name.strip()
        if not sep or not name or " " in name:
            raise ParseError("expected 'NAME = VALUE', got {!r}".format(text))
        return name, value.strip()

    def _require_space(self) -> QuadSpace:
        if self.space is None:
            raise ParseError("declare a space first")
        return self.space

    def _declare_triangle(self, name: str, tokens: List[str], number: int):
        space = self._require_space()
        if space.dim != 2 or len(tokens) != 3:
            raise ParseError("a triangle is three points of a plane")
        vertices = []
        for token in tokens:
            v = self.points[token] if token in self.points else parse_point(space, token)
            if v.is_infinity:
                raise ParseError("triangle vertices are finite points")
            vertices.append(PlanePoint(space.field, *v.vector.coords))
        try:
            self.triangles[name] = OrthoConfig.from_triangle(*vertices)
        except InversiveGeometryError as exc:
            self._record("triangle {}".format(name), number, None, exc)

    ##### operations #####

    def _run_op(self, text: str, number: int):
        tokens = text.split()
        if not tokens:
            raise ParseError("op needs a verb")
        store = None
        if len(tokens) >= 3 and tokens[-2] == "as":
            store = tokens[-1]
            tokens = tokens[:-2]
        verb, args = tokens[0], tokens[1:]
        if verb not in self._ops:
            raise ParseError("unknown op {!r}".format(verb))
        self._require_space()
        label = " ".join(tokens)
        try:
            output, value = self._ops[verb](args)
        except ParseError:
            raise
        except (InversiveGeometryError, ZeroDivisionError) as exc:
            self._record(label, number, None, exc)
            return
        if store is not None and value is not None:
            if isinstance(value, Cycle):
                self.cycles[store] = value
            else:
                self.points[store] = value
        if value is not None:
            self.results.append((label, value))
        self._record(label, number, output)

    def _record(self, label: str, number: int, output: Optional[str], error: Exception = None):
        if error is None:
            line = "{} = {}".format(label, output)
            self.report.add(CheckResult("{:04d} {}".format(number, label), str(self.field), 0, True, None, output))
        else:
            line = "{} failed: {}: {}".format(label, type(error).__name__, error)
            self.report.add(
                CheckResult("{:04d} {}".format(number, label), str(self.field), 0, False, label,
                            "{}: {}".format(type(error).__name__, error))
            )
        logger.info(line)
        self.outputs.append(line)

    def _cycle(self, token: str) -> Cycle:
        if token not in self.cycles:
            raise ParseError("unknown cycle {!r}".format(token))
        return self.cycles[token]

    def _point(self, args: List[str]) -> VPoint:
        """Pop a point name or literal; a literal may be introduced by 'point'."""
        if not args:
            raise ParseError("missing point argument")
        token = args.pop(0)
        if token == "point":
            if not args:
                raise ParseError("missing point literal")
            token = args.pop(0)
        elif token in self.points:
            return self.points[token]
        try:
            return parse_point(self.space, token)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError("bad point {!r}: {}".format(token, exc)) from exc

    @staticmethod
    def _arity(args: List[str], n: int, usage: str):
        if len(args) < n:
            raise ParseError("usage: op {}".format(usage))

    def _op_reflect(self, args):
        self._arity(args, 2, "reflect MIRROR TARGET")
        mirror = self._cycle(args[0])
        if args[1] in self.cycles:
            image = reflect(mirror, self.cycles[args[1]])
            return format_cycle(image), image
        image = reflect_point(mirror, self._point(args[1:]))
        return format_point(image), image

    def _op_invert(self, args):
        self._arity(args, 2, "invert CIRCLE POINT")
        image = invert_point(self._cycle(args[0]), self._point(args[1:]))
        return format_point(image), image

    def _op_affine(self, args):
        self._arity(args, 2, "affine LINE POINT")
        image = affine_reflect(self._cycle(args[0]), self._point(args[1:]))
        return format_point(image), image

    def _op_classify(self, args):
        self._arity(args, 1, "classify CYCLE")
        return str(classify(self._cycle(args[0]))), None

    def _op_center(self, args):
        self._arity(args, 1, "center CYCLE")
        center, size = center_and_size(self._cycle(args[0]))
        return "center={} size={}".format(center, size), Finite(center)

    def _op_pairing(self, args):
        self._arity(args, 2, "pairing CYCLE CYCLE")
        return str(pairing(self._cycle(args[0]), self._cycle(args[1]))), None

    def _op_zeros(self, args):
        self._arity(args, 1, "zeros CYCLE")
        p = self._cycle(args[0])
        if self.space.field.is_finite:
            return " ".join(format_point(v) for v in zero_set(p)) or "empty", None
        verdict = zero_set_nonempty(p, self.budget)
        if verdict.witness is None:
            return verdict.status.value, None
        return "{} witness={}".format(verdict.status.value, verdict.witness), verdict.witness

    def _op_pencil(self, args):
        self._arity(args, 2, "pencil CYCLE CYCLE")
        pencil = Pencil(self._cycle(args[0]), self._cycle(args[1]))
        zeros = common_zeros(pencil, self.budget)
        text = "{} zeros: {}".format(
            classify_pencil(pencil).value, " ".join(format_point(v) for v in zeros) or "none"
        )
        return text, None

    def _op_conjugate(self, args):
        self._arity(args, 2, "conjugate CYCLE POINT")
        result = conjugate(self._cycle(args[0]), self._point(args[1:]))
        if result.certificate is None:
            return "{} (fixed)".format(format_point(result.point)), result.point
        alpha, beta = result.certificate
        return "{} alpha={} beta={}".format(format_point(result.point), alpha, beta), result.point

    def _op_stereo(self, args):
        self._arity(args, 1, "stereo CYCLE")
        return str(stereo_from_cycle(self._cycle(args[0]))), None

    def _op_embed(self, args):
        p = point_embed(self.space, self._point(list(args)))
        return format_cycle(p), p

    def _op_evaluate(self, args):
        self._arity(args, 2, "evaluate CYCLE POINT")
        v = self._point(args[1:])
        if v.is_infinity:
            raise ParseError("evaluate needs a finite point")
        return str(evaluate(self._cycle(args[0]), v.vector)), None

    def _op_compose(self, args):
        self._arity(args, 1, "compose CYCLE [CYCLE ...]")
        word = InversiveWord(self.space, tuple(self._cycle(name) for name in args))
        return "; ".join(str(as_matrix(word)).splitlines()), None

    def _op_ninepoint(self, args):
        self._arity(args, 1, "ninepoint TRIANGLE")
        if args[0] not in self.triangles:
            raise ParseError("unknown triangle {!r}".format(args[0]))
        cfg = self.triangles[args[0]]
        circle = nine_point_circle(cfg)
        center, size = center_and_size(circle)
        points = " ".join("inf" if x is None else str(x) for x in nine_points(cfg))
        text = "T={} circle: {} center={} size={} points: {}".format(
            cfg.T, format_cycle(circle), center, size, points
        )
        return text, circle


def load_scene(path, budget: int = DEFAULT_BUDGET) -> Scene:
    """Parse and run a scene file, keeping every object it declares."""
    scene = Scene(budget=budget)
    with open(path) as handle:
        for number, text in enumerate(handle, start=1):
            scene.run_line(text, number)
    return scene


def run_scene(path, budget: int = DEFAULT_BUDGET) -> VerdictReport:
    return load_scene(path, budget).report
