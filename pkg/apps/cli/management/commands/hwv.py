from apps.cli.base import InvariantsCommand, int_list, int_pair
from apps.traceword.words import format_product, hwv_solve
from apps.xisolver.linalg import format_matrix
from utils.response import HWV_FOUND


class Command(InvariantsCommand):
    help = "주어진 이중차수에서 형식적 최고 무게 벡터를 찾습니다."

    def add_command_arguments(self, parser):
        parser.add_argument("--degree", type=int_pair, required=True, help="이중차수, 예: 3,3")
        parser.add_argument("--factors", type=int_list, default=None, help="곱의 인수 길이, 예: 2,3,3")

    def run(self, **options):
        search = hwv_solve(options["degree"], options["factors"])
        candidates = [format_product(key) for key in search.candidates]
        basis = [str(combo) for combo in search.basis]
        matrix = [coeffs for coeffs, _ in search.system.rows]
        lines = [f"candidates: {', '.join(candidates)}", "system:", format_matrix(matrix), f"dimension: {search.dimension}"]
        lines.extend(f"  {combo}" for combo in basis)
        payload = {
            "degree": list(search.degree),
            "factors": list(options["factors"] or []),
            "candidates": candidates,
            "dimension": search.dimension,
            "basis": basis,
        }
        return self.success(self.command_name, HWV_FOUND, payload, lines)
