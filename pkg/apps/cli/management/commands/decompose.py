from django.conf import settings

from apps.cli.base import InvariantsCommand, int_or_pair
from apps.gl2rep.characters import Partition2
from apps.gl2rep.hilbert import U_SPACES, decompose
from utils.response import DECOMPOSED


class Command(InvariantsCommand):
    help = "U2, U3, U4, U6 또는 S 를 기약 GL2 표현으로 분해합니다."

    def add_command_arguments(self, parser):
        parser.add_argument("--space", required=True, choices=[*U_SPACES, "S"])
        parser.add_argument(
            "--degree",
            type=int_or_pair,
            default=None,
            help="'k' 는 전체 차수 k 성분, 'a,b' 는 전체 차수 a+b 성분과 그 안의 W2(a,b) 중복도.",
        )
        parser.add_argument("--max-degree", type=int, default=settings.SERIES_MAX_DEGREE)

    def run(self, **options):
        degree = options["degree"]
        highlight = None
        if isinstance(degree, tuple):
            highlight = Partition2.of(degree)
            degree = highlight.size
        bound = options["max_degree"] if degree is None else degree
        decomposition = decompose(options["space"], degree, bound)
        payload = {"space": options["space"], "degree": degree, "multiplicities": decomposition.as_dict()}
        lines = str(decomposition).splitlines()
        if highlight is not None:
            payload["partition"] = str(highlight)
            payload["multiplicity"] = decomposition.multiplicity(highlight)
            lines.append(f"W2{highlight}: {payload['multiplicity']}")
        return self.success(self.command_name, DECOMPOSED, payload, lines)
