"""Check outcomes and the verification report."""
import dataclasses
import enum
import json
import logging

from .util import jsonable
from .vector import vector

log = logging.getLogger('octolab.report')

SCHEMA = 1


class Status(enum.Enum):
    PASS = 'pass'
    FAIL = 'fail'
    DISCREPANCY = 'discrepancy'      # the claim is arithmetically off, documented
    INDETERMINATE = 'indeterminate'  # the claim is heuristic, evaluated but not decided

    def __str__(self):
        return self.value


@dataclasses.dataclass(frozen=True)
class Outcome:
    status: Status
    witness: object = None

    @classmethod
    def of(cls, ok, witness=None):
        return cls(Status.PASS if ok else Status.FAIL, witness)

    def __bool__(self):
        return self.status is not Status.FAIL


@dataclasses.dataclass(frozen=True)
class CheckDescriptor:
    id: str
    paper_ref: str
    module: str
    status: Status
    witness: object = None

    def as_dict(self):
        return {
            'check': self.id,
            'paper_ref': self.paper_ref,
            'module': self.module,
            'status': self.status.value,
            'witness': jsonable(self.witness),
        }


@dataclasses.dataclass
class VerificationReport:
    checks: list
    config_echo: dict = dataclasses.field(default_factory=dict)

    @property
    def summary(self):
        statuses = vector(self.checks).status
        return {status.value: statuses.count(status) for status in Status}

    @property
    def failed(self):
        return bool(vector(self.checks).where(status=Status.FAIL))

    def exit_code(self):
        return 1 if self.failed else 0

    def to_text(self):
        return ''.join(f'{c.status} {c.id} {c.paper_ref}\n' for c in self.checks)

    def to_json(self):
        doc = {
            'schema': SCHEMA,
            'config': jsonable(self.config_echo),
            'summary': self.summary,
            'checks': [c.as_dict() for c in self.checks],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + '\n'

    def render(self, format='text'):
        if format == 'json':
            return self.to_json()
        return self.to_text()
