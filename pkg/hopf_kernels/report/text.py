"""
the module of helpers for the text report templates

The templates in ``hopf_kernels_resources/template`` call these functions with the objects they receive in ``data``.
"""

from typing import *

import hopf_kernels.hopf.algebra as alg
from hopf_kernels.exactmath.field import FieldElem
from hopf_kernels.types import *


def status(passed: bool) -> str:
    return 'ok' if passed else 'FAILED'


def table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """table aligns the columns with spaces, left-justified, and draws a rule under the header."""

    cells = [[str(x) for x in header]] + [[str(x) for x in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = []
    for k, row in enumerate(cells):
        lines.append('  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
        if k == 0:
            lines.append('  '.join('-' * width for width in widths))
    return '\n'.join(lines)


def values(v: Sequence[FieldElem]) -> str:
    return '(' + ', '.join(str(x) for x in v) + ')'


def element(h: HopfAlgebraData, v: Sequence[FieldElem]) -> str:
    return alg.element_to_str(h, v)


def indices(xs: Iterable[int]) -> str:
    return '{' + ', '.join(str(x) for x in sorted(xs)) + '}'


def partition(classes: Sequence[Sequence[int]]) -> str:
    return ' | '.join(indices(cls) for cls in classes)


def axiom_rows(report: AxiomReport) -> List[List[str]]:
    return [[check.name, status(check.passed), '' if check.witness is None else str(check.witness)] for check in report.checks]


def irr_rows(irr: IrrData) -> List[List[str]]:
    return [[str(index), str(block.degree), values(block.character.values)] for index, block in enumerate(irr.blocks)]


def kernel_rows(reports: Sequence[KernelReport]) -> List[List[str]]:
    rows = []
    for report in reports:
        rows.append([
            str(report.character_index),
            str(report.character.degree),
            indices(report.ker_set),
            str(report.kernel_space.dim),
            str(report.hker_space.dim),
            str(report.ideal_space.dim),
            'yes' if report.is_normal else 'no',
            status(report.passed),
        ])
    return rows


def lattice_rows(lattice: LatticeData) -> List[List[str]]:
    rows = []
    for index, (k, normal) in enumerate(zip(lattice.subalgebras, lattice.normal_flags)):
        partner = lattice.dual_correspondence.get(index)
        rows.append([str(index), str(k.dim), 'yes' if normal else 'no', '' if partner is None else str(partner), values(k.space.pivots)])
    return rows


def finding_rows(findings: Sequence[Finding]) -> List[List[str]]:
    rows = []
    for finding in findings:
        mark = status(finding.passed) if finding.gating else ('holds' if finding.passed else 'does not hold')
        witness = ', '.join(f"""{key}={value}""" for key, value in sorted(finding.witness.items()))
        rows.append([finding.name, mark, witness])
    return rows
