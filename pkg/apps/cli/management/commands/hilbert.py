from django.conf import settings

from apps.cli.base import InvariantsCommand
from apps.gl2rep.hilbert import (
    GENERATOR_BIDEGREES,
    MUTATION_VARIABLES,
    invariant_series,
    presentation_series,
    verify_theorem_series,
)
from apps.gl2rep.series import first_difference
from utils.response import SERIES_DIFFER, SERIES_EQUAL


class Command(InvariantsCommand):
    help = "불변식 대수의 힐베르트 급수와 생성원/관계식 표시의 급수를 비교합니다."

    def add_command_arguments(self, parser):
        parser.add_argument("--max-degree", type=int, default=settings.SERIES_MAX_DEGREE, help="전개할 전체 차수")
        parser.add_argument(
            "--mutate-factor",
            type=int,
            choices=range(len(GENERATOR_BIDEGREES)),
            help="음성 대조: 생성원 분모 인수 하나의 지수를 올립니다.",
        )
        parser.add_argument(
            "--mutate-variable",
            choices=MUTATION_VARIABLES,
            default="t1",
            help="--mutate-factor 에서 지수를 올릴 변수",
        )

    def run(self, **options):
        bound = options["max_degree"]
        mutate = options.get("mutate_factor")
        variable = options.get("mutate_variable") or "t1"
        series = invariant_series(bound)
        difference = first_difference(series, presentation_series(bound, mutate, variable))
        passed = verify_theorem_series(bound, mutate, variable)
        payload = {
            "max_degree": bound,
            "mutate_factor": mutate,
            "mutate_variable": variable if mutate is not None else None,
            "series": series.as_dict(),
        }
        lines = [str(series)]
        if difference is not None:
            key, left, right = difference
            payload["first_difference"] = {"key": list(key), "expected": str(left), "presented": str(right)}
            lines.append(f"first difference at {key}: {left} != {right}")
        return self.verdict(self.command_name, passed, SERIES_EQUAL, SERIES_DIFFER, payload, lines)
