from apps.cli.base import InvariantsCommand
from apps.invariantlib.context import InvariantContext
from apps.invariantlib.elements import bihomogeneous_ch_component, verify_lemma1
from utils.response import LEMMA1_FAILED, LEMMA1_VERIFIED


class Command(InvariantsCommand):
    help = "tr(x^2y^2), tr(x^2y^2xy) 를 v, w 와 저차 대각합으로 쓴 식을 확인합니다."

    def add_command_arguments(self, parser):
        parser.add_argument("--generic-x", action="store_true", help="x 도 일반 무대각합 행렬로 둡니다.")

    def run(self, **options):
        ctx = InvariantContext.generic() if options["generic_x"] else InvariantContext.diagonal()
        quartic, sextic = verify_lemma1(ctx)
        component = bihomogeneous_ch_component(ctx)
        residuals = {"tr(x^2y^2)": len(quartic), "tr(x^2y^2xy)": len(sextic), "degree (2,2) identity": len(component)}
        lines = [f"context: {ctx.label}"] + [f"{name}: {terms} residual terms" for name, terms in residuals.items()]
        passed = not any(residuals.values())
        payload = {"context": ctx.label, "residual_terms": residuals}
        return self.verdict(self.command_name, passed, LEMMA1_VERIFIED, LEMMA1_FAILED, payload, lines)
