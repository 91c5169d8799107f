import contextlib
import io
import json
import pathlib
import tempfile
import unittest
from typing import *

import hopf_kernels.__about__ as about
from hopf_kernels.corpus.builtins import builtin_algebra
from hopf_kernels.corpus.fileformat import algebra_to_dict, parse_algebra
from hopf_kernels.exactmath.field import elem_from_json, field_make
from hopf_kernels.main import EXIT_INVALID, EXIT_OK, get_parser, main


class TestHopfKernelsCommand(unittest.TestCase):
    """TestHopfKernelsCommand is a class for end-to-end tests about hopf-kernels command.
    """
    def _run(self, args: List[str]) -> Tuple[int, str]:
        with tempfile.TemporaryDirectory() as tmpdir:
            config_file = pathlib.Path(tmpdir) / 'config.toml'
            fh = io.StringIO()
            with contextlib.redirect_stdout(fh):
                code = main(args + ['--config-file', str(config_file)])
        return code, fh.getvalue()

    def test_theorems(self) -> None:
        code, output = self._run(['theorems', '--builtin', 'S3'])
        self.assertEqual(code, EXIT_OK)
        self.assertIn('S3', output)

    def test_kernels_json(self) -> None:
        code, output = self._run(['kernels', '--builtin', 'S3', '--json', '--combination', '0,1,0'])
        self.assertEqual(code, EXIT_OK)
        data = json.loads(output)
        self.assertEqual(data['command'], 'kernels')
        self.assertEqual(data['exit_code'], EXIT_OK)
        self.assertEqual(data['combination']['dim'], 3)
        self.assertTrue(data['combination']['is_normal'])

    def test_irr_json(self) -> None:
        code, output = self._run(['irr', '--builtin', 'S3', '--json'])
        self.assertEqual(code, EXIT_OK)
        data = json.loads(output)
        field = field_make(3)
        self.assertEqual([block['degree'] for block in data['irr']['blocks']], [1, 1, 2])
        for key in ('irr', 'coirr'):
            for block in data[key]['blocks']:
                values = block['character']['values']
                self.assertEqual(len(values), 6)
                for value in values:
                    self.assertEqual(len(value), 2)
                    self.assertTrue(all(isinstance(s, str) for s in value))
                    elem_from_json(field, value)
        sign = [elem_from_json(field, value) for value in data['irr']['blocks'][1]['character']['values']]
        self.assertEqual(sorted(x.rational_value() for x in sign), [-1, -1, -1, 1, 1, 1])

    def test_kernel_reports_json(self) -> None:
        code, output = self._run(['kernels', '--builtin', 'S3', '--json'])
        self.assertEqual(code, EXIT_OK)
        reports = json.loads(output)['reports']
        keys = {'character_index', 'ker_set', 'dim_kernel', 'dim_sm_oracle', 'dim_hopf_kernel', 'equal_2_10', 'is_normal', 'passed'}
        self.assertEqual([set(report) for report in reports], [keys] * 3)
        self.assertEqual([report['character_index'] for report in reports], [0, 1, 2])
        self.assertEqual([report['dim_kernel'] for report in reports], [6, 3, 1])
        self.assertEqual([report['dim_sm_oracle'] for report in reports], [6, 3, 1])
        self.assertEqual([report['dim_hopf_kernel'] for report in reports], [6, 3, 1])
        self.assertEqual([len(report['ker_set']) for report in reports], [6, 3, 1])
        self.assertTrue(all(report['equal_2_10'] and report['is_normal'] for report in reports))

    def test_corpus_json(self) -> None:
        code, output = self._run(['corpus', '--json', '--max-dim', '4'])
        self.assertEqual(code, EXIT_OK)
        data = json.loads(output)
        self.assertTrue(data['passed'])
        self.assertEqual([result['name'] for result in data['results']], ['C2', 'Fun-C2', 'C4', 'Fun-C4', 'C2xC2', 'Fun-C2xC2'])

    def test_export(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            path = pathlib.Path(tmpdir) / 'kp8.json'
            code, _ = self._run(['export', '--builtin', 'KP8', '--dual', '-o', str(path)])
            self.assertEqual(code, EXIT_OK)
            h = parse_algebra(path.read_text(encoding='utf-8'))
            self.assertEqual(h.name, 'Fun-KP8')
            self.assertEqual(h.dim, 8)

            code, output = self._run(['verify', str(path)])
            self.assertEqual(code, EXIT_OK)

    def test_broken_counit(self) -> None:
        data = algebra_to_dict(builtin_algebra('C2'))
        data['counit'][1] = ['0']
        with tempfile.TemporaryDirectory() as tmpdir:
            path = pathlib.Path(tmpdir) / 'broken.json'
            path.write_text(json.dumps(data), encoding='utf-8')
            code, _ = self._run(['verify', str(path)])
        self.assertEqual(code, EXIT_INVALID)

    def test_invalid_inputs(self) -> None:
        self.assertEqual(self._run(['verify', '--builtin', 'S4'])[0], EXIT_INVALID)
        self.assertEqual(self._run(['lattice', '--builtin', 'S3', '--max-dim', '4'])[0], EXIT_INVALID)
        self.assertEqual(self._run(['kernels', '--builtin', 'C2', '--combination', 'a,b'])[0], EXIT_INVALID)
        with tempfile.TemporaryDirectory() as tmpdir:
            self.assertEqual(self._run(['verify', str(pathlib.Path(tmpdir) / 'missing.json')])[0], EXIT_INVALID)

    def test_metadata(self) -> None:
        self.assertEqual(get_parser().prog, about.__title__)
        self.assertEqual(about.__version__, '0.1.0')
        self.assertFalse(hasattr(about, '__url__'))
