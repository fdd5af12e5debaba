import json

import pytest

from hamdec import CertificateDocument, construct, ConnectionSet
from hamdec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCheck:
    def test_not_admissible_exit_1(self, capsys):
        code, out, _ = run(capsys, "check", "--set", "1,2")
        assert code == 1
        assert "admissible: no" in out

    def test_admissible_exit_0(self, capsys):
        code, out, _ = run(capsys, "check", "--set", "1,3")
        assert code == 0
        assert "admissible: yes" in out

    def test_zero_generator_exit_2(self, capsys):
        code, _, err = run(capsys, "check", "--set", "0,3")
        assert code == 2

    def test_garbage_exit_2(self, capsys):
        code, _, _ = run(capsys, "check", "--set", "1,x")
        assert code == 2


class TestConstruct:
    def test_consecutive_4(self, capsys, tmp_path):
        out_file = tmp_path / "cert.json"
        code, out, _ = run(capsys, "construct", "--set", "1,2,3,4", "--out", str(out_file))
        assert code == 0
        assert "[0, -1, 1, 5, 2, 3, 6, 4, 8]" in out
        payload = json.loads(out_file.read_text())
        assert payload["starter_vertices"] == [0, -1, 1, 5, 2, 3, 6, 4, 8]
        assert payload["schema_version"] == "1"

    def test_skip_k(self, capsys):
        code, out, _ = run(capsys, "construct", "--set", "1,2,4")
        assert code == 0
        assert "[0, 1, -1, 3]" in out

    def test_unsupported_exit_3(self, capsys):
        code, out, _ = run(capsys, "construct", "--set", "4,6,9")
        assert code == 3

    def test_not_admissible_exit_1(self, capsys):
        code, out, _ = run(capsys, "construct", "--set", "1,2")
        assert code == 1


class TestVerify:
    def make_cert_file(self, tmp_path, s="1,2,3,4"):
        cert = construct(ConnectionSet([int(x) for x in s.split(",")]))
        doc = CertificateDocument.from_certificate(cert, provenance="test")
        path = tmp_path / "cert.json"
        path.write_text(doc.to_json())
        return path, cert

    def test_pipeline_exit_0(self, capsys, tmp_path):
        path, _ = self.make_cert_file(tmp_path)
        code, out, _ = run(capsys, "verify", "--cert", str(path))
        assert code == 0
        assert "exact check: accepted" in out
        assert "window oracle" in out

    def test_broken_starter_exit_1(self, capsys, tmp_path):
        path, cert = self.make_cert_file(tmp_path)
        payload = json.loads(path.read_text())
        del payload["starter_vertices"][3]  # splice a vertex out
        path.write_text(json.dumps(payload))
        code, out, _ = run(capsys, "verify", "--cert", str(path))
        assert code == 1
        assert "PathBroken" in out

    def test_repeated_vertex_reports_path_broken(self, capsys, tmp_path):
        path, cert = self.make_cert_file(tmp_path)
        payload = json.loads(path.read_text())
        payload["starter_vertices"][2] = payload["starter_vertices"][1]
        path.write_text(json.dumps(payload))
        code, out, _ = run(capsys, "verify", "--cert", str(path))
        assert code == 1
        assert "PathBroken" in out

    def test_truncated_json_exit_2(self, capsys, tmp_path):
        path, _ = self.make_cert_file(tmp_path)
        path.write_text(path.read_text()[:40])
        code, out, _ = run(capsys, "verify", "--cert", str(path))
        assert code == 2

    def test_unknown_schema_exit_2(self, capsys, tmp_path):
        path, _ = self.make_cert_file(tmp_path)
        payload = json.loads(path.read_text())
        payload["schema_version"] = "99"
        path.write_text(json.dumps(payload))
        code, out, _ = run(capsys, "verify", "--cert", str(path))
        assert code == 2

    def test_missing_file_exit_2(self, capsys, tmp_path):
        code, _, _ = run(capsys, "verify", "--cert", str(tmp_path / "nope.json"))
        assert code == 2


class TestBuratti:
    def test_k9_shorthand_exhausted_exit_4(self, capsys):
        code, out, _ = run(capsys, "buratti", "--k", "9", "--lengths", "3×8")
        assert code == 4
        assert "exhausted" in out

    def test_ascii_shorthand(self, capsys):
        code, out, _ = run(capsys, "buratti", "--k", "9", "--lengths", "3x8")
        assert code == 4

    def test_walecki_witness(self, capsys):
        code, out, _ = run(capsys, "buratti", "--k", "5", "--lengths", "1,1,2,2")
        assert code == 0
        assert "[0, 1, 4, 2, 3]" in out

    def test_size_mismatch_exit_2(self, capsys):
        code, _, _ = run(capsys, "buratti", "--k", "5", "--lengths", "1,1")
        assert code == 2

    def test_sweep_7(self, capsys):
        code, out, _ = run(capsys, "buratti", "--sweep-prime", "7")
        assert code == 0
        lines = out.strip().splitlines()
        records = [l for l in lines if "\t" in l]
        assert len(records) == 28
        assert all(len(l.split("\t")) == 4 for l in records)
        assert "0 failures" in lines[-1]

    def test_sweep_not_prime_exit_2(self, capsys):
        code, _, _ = run(capsys, "buratti", "--sweep-prime", "9")
        assert code == 2

    def test_requires_one_mode(self, capsys):
        code, _, err = run(capsys, "buratti", "--k", "5")
        assert code == 2


class TestFigure:
    @pytest.fixture()
    def cert_file(self, tmp_path, capsys):
        path = tmp_path / "c.json"
        run(capsys, "construct", "--set", "1,3", "--out", str(path))
        return path

    def test_svg_deterministic(self, capsys, tmp_path, cert_file):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        assert run(capsys, "figure", "--cert", str(cert_file), "--range", "0..12",
                   "--format", "svg", "--out", str(a))[0] == 0
        assert run(capsys, "figure", "--cert", str(cert_file), "--range", "0..12",
                   "--format", "svg", "--out", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_svg_has_one_class_per_path(self, capsys, cert_file):
        code, out, _ = run(capsys, "figure", "--cert", str(cert_file),
                           "--range", "0..12", "--format", "svg")
        assert code == 0
        assert 'class="h0"' in out and 'class="h1"' in out
        assert 'class="h2"' not in out

    def test_dot_output(self, capsys, cert_file):
        code, out, _ = run(capsys, "figure", "--cert", str(cert_file),
                           "--range=-6..6", "--format", "dot")
        assert code == 0
        assert out.startswith("graph decomposition {")
        assert '"-6" [pos="0,0!"];' in out

    def test_trivial_certificate_single_stroke_class(self, capsys, tmp_path):
        path = tmp_path / "t.json"
        run(capsys, "construct", "--set", "1", "--out", str(path))
        code, out, _ = run(capsys, "figure", "--cert", str(path),
                           "--range", "0..8", "--format", "svg")
        assert code == 0
        assert 'class="h0"' in out and 'class="h1"' not in out

    def test_range_smaller_than_period_exit_2(self, capsys, cert_file):
        code, _, _ = run(capsys, "figure", "--cert", str(cert_file),
                         "--range", "0..2", "--format", "svg")
        assert code == 2

    def test_bad_range_exit_2(self, capsys, cert_file):
        code, _, _ = run(capsys, "figure", "--cert", str(cert_file),
                         "--range", "abc", "--format", "svg")
        assert code == 2


class TestDocumentRoundTrip:
    def test_round_trip_certificates(self):
        for s in ([1, 3], [1, 2, 3, 4], [1, 2, 4], [1, 2, 4, 6, 8], [1, 2, 10], [3, 5, 7]):
            cert = construct(ConnectionSet(s))
            doc = CertificateDocument.from_certificate(cert, provenance="p")
            parsed = CertificateDocument.from_json(doc.to_json())
            assert parsed == doc
            assert parsed.to_certificate() == cert
