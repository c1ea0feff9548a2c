import os
from pathlib import Path

import pytest

import ciprng

DATA = Path(os.environ.get("CIPRNG_TEST_DATA_DIR", Path(__file__).resolve().parents[1] / "data"))


def test_forced_transcript_output():
    g = ciprng.Generator("10100", [2, 4, 2, 2, 5, 1, 1, 5, 5, 3, 2, 3, 3], [4, 5, 4])
    assert g.read_bits(20) == "10100111101111110011"


def test_keystream_bytes_from_transcript():
    g = ciprng.Generator("10100", [2, 4, 2, 2, 5, 1, 1, 5, 5, 3, 2, 3, 3], [4, 5, 4])
    assert g.read_bytes(2) == b"\xa7\xbf"


def test_scheme_stream_and_config_round_trip():
    config = ciprng.GeneratorConfig.scheme("scheme-6", t=484076)
    assert config.n_cells == 5
    assert config.m_set == [14, 15]
    assert config.x0 == "01100"
    assert ciprng.generate_bits(config, 64) == (
        "0110001010011001110101010100001101001110001000001111111110011010"
    )
    assert ciprng.GeneratorConfig.parse(config.serialize()) == config


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        ciprng.GeneratorConfig(1, [1], t=3)
    with pytest.raises(RuntimeError):
        ciprng.GeneratorConfig(5, [4, 5], x0="10100", y0=0.5)
    config = ciprng.GeneratorConfig(5, [4, 5], x0="10100", y0=0.14644660940672624)
    with pytest.raises(ciprng.DegenerateSeedError):
        ciprng.generate_bits(config, 500)


def test_special_functions_and_tests():
    assert ciprng.erfc(1.0) == pytest.approx(0.1572992070502851, rel=1e-12)
    assert ciprng.gamma_q(4.5, 4.5) == pytest.approx(0.43727418891386706, rel=1e-12)
    r = ciprng.runs_test("1001101011", relaxed=True)
    assert r.test_name == "runs"
    assert r.p_value == pytest.approx(0.14723225536366556, rel=1e-12)


def test_battery_desk_run():
    config = ciprng.GeneratorConfig.scheme("scheme-6", t=484076)
    report = ciprng.run_battery(config, n_sequences=5, sequence_length=100000, relaxed=True)
    assert report.all_pass()
    assert len(report.find("frequency").p_values) == 5
    assert report.warnings


def test_analysis():
    bits = ciprng.generate_bits(ciprng.GeneratorConfig.scheme("scheme-6", t=1), 4096)
    r = ciprng.autocorrelation(bits, 10)
    assert r[0] == 1.0 and len(r) == 11
    assert sum(ciprng.power_spectrum(bits)) > 0
    g = ciprng.Generator("0000", [1, 2, 3, 4], [1, 2], cyclic=True)
    assert ciprng.detect_cycle(g) == (0, 16)
    assert ciprng.phase_distance([1] * 40, "000", [2] * 40, "000") == pytest.approx(1 / 3, abs=1e-12)


def test_pgm_round_trip(tmp_path):
    config = ciprng.GeneratorConfig.scheme("scheme-6", t=484076)
    enc, dec = tmp_path / "e.pgm", tmp_path / "d.pgm"
    ciprng.xor_pgm(str(DATA / "fixture.pgm"), str(enc), config)
    ciprng.xor_pgm(str(enc), str(dec), config)
    assert ciprng.pgm_histogram(str(dec)) == ciprng.pgm_histogram(str(DATA / "fixture.pgm"))
    assert sum(ciprng.pgm_histogram(str(enc))) == 128 * 128
