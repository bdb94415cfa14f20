import json
from dataclasses import dataclass, field

from django.conf import settings
from django.db import models
from django.utils.translation import gettext_lazy as _


class ReportStatus(models.TextChoices):
    PASS = "pass", _("통과")
    FAIL = "fail", _("실패")


@dataclass
class RunReport:
    """
    명령 한 번의 결과.

    payload 는 JSON 직렬화 가능한 값만 담고, lines 는 텍스트 출력용입니다.
    elapsed_seconds 는 payload 와 분리되어 비교 대상에서 빠집니다.
    """

    command: str
    status: str
    message: str
    code: int = 0
    payload: dict = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)
    elapsed_seconds: float | None = None

    @property
    def passed(self) -> bool:
        return self.status == ReportStatus.PASS

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "status": str(self.status),
            "message": str(self.message),
            "code": self.code,
            "payload": self.payload,
            "version": settings.REPORT_SCHEMA_VERSION,
        }

    def to_json(self, with_timing: bool = True) -> str:
        data = self.as_dict()
        if with_timing and self.elapsed_seconds is not None:
            data["elapsed_seconds"] = round(self.elapsed_seconds, 3)
        return json.dumps(data, sort_keys=True, ensure_ascii=False)

    def to_text(self) -> str:
        head = f"[{str(self.status).upper()}] {self.command}: {self.message}"
        return "\n".join([head, *self.lines])
