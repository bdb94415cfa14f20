"""
미지 계수 관계식 w^2 - sum xi_i w_i = 0 에서 xi 여덟 개를 복원합니다.

구체적인 행렬 x, y 에서 관계식을 평가하고 단항식 계수를 xi 에 대한
일차방정식으로 모은 뒤 단계마다 정확히 풉니다.
  1단계: x 대각, y 순환 0/1 행렬
  2단계: x = diag(1,-1,0), y = diag(0,1,-1)
  3단계: x 대각, y12 = y21 = 1
  4단계: x 대각, y 일반 무대각합 (지정된 단항식 두 개, discover 시 전체)
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from apps.exactpoly.polynomial import Monomial
from apps.exactpoly.serialization import format_monomial, format_rational
from apps.invariantlib.context import InvariantContext
from apps.invariantlib.elements import XI_LABELS, build_w, w_elements

from .exceptions import InconsistentSystemError, UnderdeterminedSystemError
from .linalg import LinearSystem, Solution, SolutionStatus, solve_exact

logger = logging.getLogger(__name__)

CIRCULANT_Y = ((0, 1, 0), (0, 0, 1), (1, 0, 0))
DIAGONAL_PAIR_X = {"x1": 1, "x2": -1}
DIAGONAL_PAIR_Y = ((0, 0, 0), (0, 1, 0), (0, 0, -1))
SYMMETRIC_Y = ((0, 1, 0), (1, 0, 0), (0, 0, 0))
NAMED_MONOMIALS = ("x1^3*x2^3*y11^3*y12*y23*y31", "x1*x2^5*y12*y22*y23^2*y31*y32")


@dataclass(frozen=True)
class XiEquation:
    """
    단항식 하나의 계수 비교: sum coeffs_i * xi_i = rhs.
    rhs 는 w^2 의 계수, coeffs_i 는 w_i 의 계수입니다.
    """

    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    monomial: str = ""
    step: str = ""

    def is_trivial(self) -> bool:
        return not any(self.coeffs) and not self.rhs

    def normalized(self) -> tuple[tuple[Fraction, ...], Fraction]:
        """첫 0 이 아닌 계수를 1 로 맞춘 (계수, 우변). 중복 제거의 기준."""
        head = next((c for c in self.coeffs if c), None)
        if head is None:
            return self.coeffs, Fraction(int(bool(self.rhs)))
        return tuple(c / head for c in self.coeffs), self.rhs / head

    def residual_text(self, labels: Sequence[str] = XI_LABELS) -> str:
        """관계식 잔차 형태: rhs - (sum coeffs_i xi_i) = 0."""
        terms = [f"{format_rational(c)}*{label}" for c, label in zip(self.coeffs, labels, strict=True) if c]
        inner = " + ".join(terms) if terms else "0"
        return f"{format_rational(self.rhs)} - ({inner}) = 0"

    def __str__(self) -> str:
        prefix = f"[{self.monomial}] " if self.monomial else ""
        return prefix + self.residual_text()


@dataclass(frozen=True)
class ReducedEquation:
    """
    앞 단계의 해족 xi = p + sum t_k n_k 를 대입한 잔차: constant + sum coeffs_k t_k = 0.
    """

    constant: Fraction
    coeffs: tuple[Fraction, ...]
    free: tuple[str, ...]
    monomial: str = ""

    def __str__(self) -> str:
        parts = [f"{format_rational(c)}*{label}" for c, label in zip(self.coeffs, self.free, strict=True) if c]
        parts.append(format_rational(self.constant))
        return " + ".join(parts) + " = 0"


@dataclass
class StepRecord:
    name: str
    description: str
    equations: list[XiEquation]
    solution: Solution
    reduced: list[ReducedEquation] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "equations": [e.residual_text() for e in self.equations],
            "reduced": [str(r) for r in self.reduced],
            "solution": self.solution.as_dict(),
        }


@dataclass
class PipelineTranscript:
    steps: list[StepRecord] = field(default_factory=list)
    xi: tuple[Fraction, ...] | None = None

    def step(self, name: str) -> StepRecord:
        return next(s for s in self.steps if s.name == name)

    def as_dict(self) -> dict:
        return {
            "steps": [s.as_dict() for s in self.steps],
            "xi": None if self.xi is None else dict(zip(XI_LABELS, map(format_rational, self.xi), strict=True)),
        }

    def __str__(self) -> str:
        lines = []
        for s in self.steps:
            lines.append(f"== {s.name}: {s.description}")
            lines.extend(f"  {e}" for e in s.equations)
            lines.extend(f"  reduced: {r}" for r in s.reduced)
            lines.extend(f"  {line}" for line in str(s.solution).splitlines())
        if self.xi is not None:
            lines.append("xi = (" + ", ".join(format_rational(v) for v in self.xi) + ")")
        return "\n".join(lines)


def _monomial_key(monomial) -> int:
    if isinstance(monomial, Monomial):
        return monomial.key
    if isinstance(monomial, int):
        return monomial
    return Monomial.parse(monomial).key


def equations_from(
    ctx: InvariantContext, step: str, monomials: Iterable | None = None
) -> list[XiEquation]:
    """
    w^2 과 w_i 의 단항식 계수로 방정식을 만듭니다.
    monomials 가 없으면 나타나는 모든 단항식을 씁니다.
    """
    w = build_w(ctx)
    square = ctx.remember("w_squared", lambda: w * w)
    elements = [dict(p.items()) for p in w_elements(ctx).values()]
    square_terms = dict(square.items())
    if monomials is None:
        keys = set(square_terms)
        for terms in elements:
            keys |= set(terms)
        keys = sorted(keys, reverse=True)
    else:
        keys = [_monomial_key(m) for m in monomials]
    equations = []
    for key in keys:
        coeffs = tuple(Fraction(terms.get(key, 0)) for terms in elements)
        equation = XiEquation(coeffs, Fraction(square_terms.get(key, 0)), format_monomial(key), step)
        if not equation.is_trivial():
            equations.append(equation)
    return equations


def deduplicate(equations: Iterable[XiEquation]) -> list[XiEquation]:
    """정규화 후 같은 방정식은 처음 것만 남깁니다."""
    seen = set()
    out = []
    for equation in equations:
        key = equation.normalized()
        if key in seen:
            continue
        seen.add(key)
        out.append(equation)
    return out


_SPECIALIZATIONS = {
    "step1": lambda: InvariantContext.specialized(CIRCULANT_Y),
    "step2": lambda: InvariantContext.specialized(DIAGONAL_PAIR_Y, DIAGONAL_PAIR_X),
    "step3": lambda: InvariantContext.specialized(SYMMETRIC_Y),
}


def xi_step_equations(step: str, ctx: InvariantContext | None = None, discover: bool = False) -> list[XiEquation]:
    """단계 이름(step1 .. step4)에 해당하는 방정식 (중복 제거)."""
    if step == "step4":
        ctx = ctx or InvariantContext.diagonal()
        equations = equations_from(ctx, step, None if discover else NAMED_MONOMIALS)
    else:
        equations = equations_from(_SPECIALIZATIONS[step](), step)
    return deduplicate(equations)


def reduced_equations(equations: Iterable[XiEquation], family: Solution) -> list[ReducedEquation]:
    """해족을 대입한 잔차 방정식 (자유 변수에 대한 일차식)."""
    out = []
    for eq in equations:
        constant = eq.rhs - sum((a * p for a, p in zip(eq.coeffs, family.particular, strict=True)), Fraction(0))
        coeffs = tuple(
            -sum((a * n for a, n in zip(eq.coeffs, vec, strict=True)), Fraction(0)) for vec in family.nullspace
        )
        out.append(ReducedEquation(constant, coeffs, tuple(family.free), eq.monomial))
    return out


_DESCRIPTIONS = {
    "step1": "x diagonal, y = circulant 0/1 matrix",
    "step2": "x = diag(1,-1,0), y = diag(0,1,-1)",
    "step3": "x diagonal, y12 = y21 = 1",
    "step4": "x diagonal, y generic traceless",
}


def xi_pipeline(ctx: InvariantContext | None = None, discover: bool = False) -> PipelineTranscript:
    """
    네 단계를 차례로 풀어 xi 를 결정합니다.
    어느 단계에서든 모순이면 그 단계 이름으로 InconsistentSystemError.
    """
    system = LinearSystem(labels=list(XI_LABELS))
    transcript = PipelineTranscript()
    family: Solution | None = None
    for step in ("step1", "step2", "step3", "step4"):
        equations = xi_step_equations(step, ctx, discover)
        reduced = reduced_equations(equations, family) if step == "step4" and family is not None else []
        for eq in equations:
            system.add_row(eq.coeffs, eq.rhs)
        solution = solve_exact(system)
        logger.info(f"xi_pipeline {step}: {len(equations)} equations, status {solution.status}")
        transcript.steps.append(StepRecord(step, _DESCRIPTIONS[step], equations, solution, reduced))
        if solution.status == SolutionStatus.INCONSISTENT:
            logger.warning(f"xi_pipeline: inconsistent at {step}")
            raise InconsistentSystemError(step)
        family = solution
    if family.status != SolutionStatus.UNIQUE:
        raise UnderdeterminedSystemError(", ".join(family.free))
    transcript.xi = tuple(family.particular)
    return transcript
