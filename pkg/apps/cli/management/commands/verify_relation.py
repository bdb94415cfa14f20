import argparse

from django.conf import settings

from apps.cli.base import InvariantsCommand
from apps.exactpoly.serialization import format_rational
from apps.invariantlib.context import InvariantContext
from apps.invariantlib.elements import DEFINING_XI, W_LABELS, relation_polynomial
from utils.response import RELATION_FAILED, RELATION_VERIFIED


class Command(InvariantsCommand):
    help = "w^2 - sum xi_i w_i 가 영다항식인지 확인합니다."

    def add_command_arguments(self, parser):
        parser.add_argument(
            "--generic-x",
            action="store_true",
            default=settings.VERIFY_GENERIC_X,
            help="x 도 일반 무대각합 행렬로 둡니다 (수십 초).",
        )
        # 음성 대조: 해당 xi 에 1 을 더합니다
        parser.add_argument("--corrupt-xi", type=int, choices=range(len(W_LABELS)), help=argparse.SUPPRESS)

    def run(self, **options):
        ctx = InvariantContext.generic() if options["generic_x"] else InvariantContext.diagonal()
        xi = list(DEFINING_XI)
        if options.get("corrupt_xi") is not None:
            xi[options["corrupt_xi"]] += 1
        residual = relation_polynomial(ctx, xi)
        xi_text = ", ".join(format_rational(v) for v in xi)
        payload = {
            "context": ctx.label,
            "xi": [format_rational(v) for v in xi],
            "residual_terms": len(residual),
        }
        lines = [f"context: {ctx.label}", f"xi = ({xi_text})", f"residual terms: {len(residual)}"]
        return self.verdict(self.command_name, residual.is_zero(), RELATION_VERIFIED, RELATION_FAILED, payload, lines)
