from apps.cli.base import InvariantsCommand
from apps.matrixtrace.matrices import (
    cayley_hamilton_residual,
    ch_traceless_identity,
    generic_matrix,
    generic_traceless,
    traceless_ch_matrix_residual,
)
from utils.response import CH_FAILED, CH_VERIFIED


class Command(InvariantsCommand):
    help = "3x3 일반 행렬의 Cayley-Hamilton 항등식과 무대각합 형태를 확인합니다."

    def run(self, **options):
        z = generic_matrix("x")
        traceless = generic_traceless("x")
        checks = {
            "z^3 - e1 z^2 + e2 z - e3": cayley_hamilton_residual(z).is_zero(),
            "z^3 - 1/2 tr(z^2) z - 1/3 tr(z^3)": traceless_ch_matrix_residual(traceless).is_zero(),
            "tr(z^4) - 1/2 tr(z^2)^2": ch_traceless_identity(traceless).is_zero(),
        }
        lines = [f"{name}: {'zero' if ok else 'NONZERO'}" for name, ok in checks.items()]
        return self.verdict(self.command_name, all(checks.values()), CH_VERIFIED, CH_FAILED, {"checks": checks}, lines)
