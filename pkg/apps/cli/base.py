import argparse
import logging
import time

from django.core.management.base import BaseCommand, CommandError

from config.exception_handler import custom_exception_handler
from utils.exceptions import EXIT_OK
from utils.response import BaseReportMixin

logger = logging.getLogger(__name__)


def int_pair(text: str) -> tuple[int, int]:
    """'3,3' -> (3, 3)"""
    try:
        first, second = (int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected two integers 'a,b', got {text!r}") from exc
    return first, second


def int_list(text: str) -> list[int]:
    """'2,3,3' -> [2, 3, 3]"""
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from exc


def int_or_pair(text: str) -> int | tuple[int, int]:
    """'6' -> 6, '6,6' -> (6, 6)"""
    if "," in text:
        return int_pair(text)
    try:
        return int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer or 'a,b', got {text!r}") from exc


class InvariantsCommand(BaseReportMixin, BaseCommand):
    """
    모든 검증 명령의 기반.

    하위 클래스는 run(**options) 에서 RunReport 를 돌려줍니다. 실패 보고서는
    출력 후 CommandError(returncode=code) 로 바뀝니다.
    """

    requires_system_checks: list = []

    def add_arguments(self, parser):
        parser.add_argument("--json", action="store_true", help="결과를 JSON 으로 출력합니다.")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def run(self, **options):
        raise NotImplementedError

    @property
    def command_name(self) -> str:
        return self.__module__.rsplit(".", 1)[-1]

    def handle(self, *args, **options):
        started = time.perf_counter()
        try:
            report = self.run(**options)
        except Exception as exc:
            report = custom_exception_handler(exc, {"command": self.command_name})
        report.elapsed_seconds = time.perf_counter() - started
        logger.info(f"{self.command_name}: {report.status} in {report.elapsed_seconds:.2f}s")

        if options.get("json"):
            self.stdout.write(report.to_json())
        else:
            self.stdout.write(report.to_text())
            self.stderr.write(f"elapsed: {report.elapsed_seconds:.2f}s")

        if report.code != EXIT_OK:
            raise CommandError(report.message, returncode=report.code)
