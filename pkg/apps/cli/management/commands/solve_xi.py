from apps.cli.base import InvariantsCommand
from apps.invariantlib.context import InvariantContext
from apps.invariantlib.elements import relation_polynomial
from apps.xisolver.pipeline import xi_pipeline
from utils.response import XI_MISMATCH, XI_SOLVED


class Command(InvariantsCommand):
    help = "네 가지 특수화에서 관계식의 xi 계수를 다시 구합니다."

    def add_command_arguments(self, parser):
        parser.add_argument("--discover", action="store_true", help="4단계에서 모든 단항식을 방정식으로 씁니다.")

    def run(self, **options):
        ctx = InvariantContext.diagonal()
        transcript = xi_pipeline(ctx, discover=options["discover"])
        closes = relation_polynomial(ctx, transcript.xi).is_zero()
        return self.verdict(
            self.command_name, closes, XI_SOLVED, XI_MISMATCH, transcript.as_dict(), str(transcript).splitlines()
        )
