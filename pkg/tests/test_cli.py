import json

import pytest
from pydantic import ValidationError

from src.cli import commands
from src.cli.schemes import RunConfig
from src.config import config
from src.expansion.expanded import expand_word
from src.main import main
from src.utils import format_index_list, parse_index_list


def run_json(capsys, *argv: str) -> tuple[int, dict]:
    code = main([*argv, '--format', 'json'])
    return code, json.loads(capsys.readouterr().out)


class TestCommands:

    def test_field(self, capsys):
        code, document = run_json(capsys, 'field')
        assert code == 0
        assert document['schema'] == 1
        assert len(document['classes']) == 5

    def test_field_over_gf4(self, capsys):
        code, document = run_json(capsys, 'field', '-q', '4')
        assert code == 0
        assert len(document['classes']) == 9

    def test_field_csv(self, capsys):
        assert main(['field', '--format', 'csv']) == 0
        assert capsys.readouterr().out.splitlines()[0] == 'exponents,minimal_polynomial'

    def test_code(self, capsys):
        code, document = run_json(capsys, 'code', '--rs', '1', '4', '--verify')
        assert code == 0
        assert document['K'] == 11
        assert document['orthogonal'] is True

    def test_expand(self, capsys):
        code, document = run_json(capsys, 'expand', '--rs', '1', '4', '--matrix', 'generator')
        assert code == 0
        assert document['generator_rank'] == 44
        assert len(document['generator']) == 44

    def test_constant_weight(self, capsys):
        code, document = run_json(capsys, 'cw', '--poly', 'x^4+x^3+1')
        assert code == 0
        assert document['weights'] == [8]
        assert document['listing_match'] == 'exact'

    def test_subdim(self, capsys):
        code, document = run_json(capsys, 'subdim', '--gammas', '5', '--basis', '1,a^5,a,a^6', '--subbasis', '1,2')
        assert code == 0
        assert document['dim_gamma'] == document['dim_theta'] == document['dim_oracle'] == 2
        assert document['agree'] is True

    def test_subdim_search(self, capsys):
        code, document = run_json(capsys, 'subdim', '--gammas', '5', '--search', '2')
        assert code == 0
        assert document['dimension'] == 2
        assert document['subbasis'] == '1,2'

    def test_dmin(self, capsys):
        code, document = run_json(capsys, 'dmin', '-n', '5', '--gammas', '21,22')
        assert code == 0
        assert document['bound'] == 64
        assert document['reference'] == 48

    def test_witness(self, capsys):
        code, document = run_json(capsys, 'dmin', '--witness', '5', '1/2', '-1')
        assert code == 0
        assert document['k1'] == 1
        assert document['weight'] == 32

    def test_witness_within_bound(self, capsys):
        code, document = run_json(capsys, 'dmin', '--witness', '5', '1/2', '1')
        assert code == 0
        assert document['within_bound'] is True

    def test_verify_uses_sample_size(self, monkeypatch):
        sizes = []

        def recording(words, basis):
            sizes.append(words.shape[0])
            return expand_word(words, basis)

        monkeypatch.setattr(config.compute_config, 'SAMPLE_SIZE', 37)
        monkeypatch.setattr(commands, 'expand_word', recording)
        assert main(['expand', '--rs', '1', '4', '--verify', '--format', 'json']) == 0
        assert sizes == [37]

    def test_out_directory(self, tmp_path, capsys):
        target = tmp_path / 'rs'
        assert main(['code', '--rs', '1', '4', '--out', str(target)]) == 0
        assert capsys.readouterr().out == ''
        assert (target / 'report.txt').exists()
        assert (target / 'generator.txt').read_text(encoding='utf-8')
        assert (target / 'parity.txt').exists()

    @pytest.mark.slow
    def test_repro(self, tmp_path):
        assert main(['repro', '--skip-slow', '--out', str(tmp_path)]) == 0
        assert (tmp_path / 'report.txt').exists()
        assert (tmp_path / 'codebook_gf16.txt').exists()
        assert (tmp_path / 'rs15_11_generator_e.txt').exists()


class TestExitCodes:

    def test_missing_gammas(self):
        assert main(['dmin', '-n', '5']) == 2

    def test_error_document(self, capsys):
        code, document = run_json(capsys, 'dmin', '-n', '5')
        assert code == 2
        assert document['schema'] == 1
        assert '--gammas' in document['detail']

    def test_missing_code_source(self):
        assert main(['code']) == 2

    def test_search_size_above_m(self):
        assert main(['subdim', '--gammas', '5', '--search', '5']) == 2

    def test_cap_without_flag(self):
        assert main(['field', '--cap', str(config.compute_config.XCYCLIC_CAP * 2)]) == 2

    def test_cap_exceeded(self):
        assert main(['dmin', '-n', '5', '--gammas', '21,22', '--no-fallback', '--cap', '2']) == 4

    def test_cap_restored(self):
        default = config.compute_config.XCYCLIC_CAP
        main(['dmin', '-n', '5', '--gammas', '21,22', '--cap', '2'])
        assert config.compute_config.XCYCLIC_CAP == default


class TestRunConfig:

    def test_large_cap(self):
        default = config.compute_config.XCYCLIC_CAP
        with pytest.raises(ValidationError):
            RunConfig(command='field', cap=default + 1)
        assert RunConfig(command='field', cap=default + 1, allow_large=True).cap == default + 1

    def test_base_order(self):
        assert RunConfig(command='field').base_order == 2
        assert RunConfig(command='field', p=3, n=2, q=9).base_order == 9

    def test_index_lists(self):
        assert parse_index_list('1,2,4') == (0, 1, 3)
        assert format_index_list([3, 0]) == '1,4'
        with pytest.raises(ValueError):
            parse_index_list('0,1')
