import json
import math
import pathlib

import pytest

import renyi

SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "schemas"
WORKED = [0.5, 0.25, 0.25]


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def test_entropies_of_worked_vector():
    assert renyi.shannon(WORKED) == pytest.approx(1.5 * math.log(2), abs=1e-15)
    assert renyi.renyi(WORKED, 2) == pytest.approx(math.log(8 / 3), abs=1e-15)
    assert renyi.renyi(WORKED, 3) == pytest.approx(0.5 * math.log(32 / 5), abs=1e-15)
    assert renyi.renyi(WORKED, math.inf) == pytest.approx(math.log(2), abs=1e-15)
    assert renyi.renyi(WORKED, 0) == pytest.approx(math.log(3), abs=1e-15)
    assert renyi.purity_stats(WORKED)["coincidence_index"] == pytest.approx(0.375)


def test_invalid_vector_raises_with_code():
    with pytest.raises(renyi.EntropyError) as info:
        renyi.shannon([0.5, 0.6])
    assert info.value.code == "NotNormalized"
    assert isinstance(info.value, ValueError)
    assert renyi.shannon([2, 2], renormalize=True) == pytest.approx(math.log(2))


def test_bounds_and_estimates():
    h2, h3 = math.log(8 / 3), 0.5 * math.log(32 / 5)
    b2 = renyi.shannon_bounds_from_H2(h2, 3)
    assert b2.upper.value == pytest.approx(renyi.shannon(WORKED), abs=1e-12)
    assert b2.lower.value == pytest.approx(1.0281838593329258, abs=1e-12)
    assert b2.lower.rigor == renyi.Rigor.RIGOROUS
    b3 = renyi.shannon_bounds_from_H3(h3, 3)
    assert b3.lower.value == pytest.approx(1.0133220066065031, abs=1e-12)
    star = renyi.estimate_star(h2, h3, 3)
    assert star.value == pytest.approx(1.0366151408402787, abs=1e-12)
    assert star.rigor == renyi.Rigor.HEURISTIC
    estimates = renyi.all_estimates(h2, h3, 3, h0=math.log(3))
    assert set(estimates) >= {"H_d23", "H_up", "H_d", "H_star", "H_023"}
    assert all(e.rigor == renyi.Rigor.HEURISTIC for e in estimates.values())


def test_inversions_round_trip():
    for a in (0.0, 0.3, 1.0):
        h = renyi.interp_renyi(1, 7, a, 3)
        assert renyi.invert_a_from_H3_top(h, 7) == pytest.approx(a, abs=1e-9)
        h = renyi.interp_renyi(4, 5, a, 2)
        assert renyi.invert_a_from_H2_bottom(h, 5) == pytest.approx(a, abs=1e-9)


def test_sampling_is_seeded():
    a = renyi.sample_fisher_rao(5, 7, count=3)
    assert a == renyi.sample_fisher_rao(5, 7, count=3)
    assert all(sum(v) == pytest.approx(1.0, abs=1e-12) for v in a)
    stats = renyi.deviation_study(6, 1000, 3, bins=20)
    assert stats == renyi.deviation_study(6, 1000, 3, bins=20, threads=1)
    assert sum(stats["delta1"]["counts"]) == 1000


def test_figures():
    lines = renyi.iso_entropy_contours(2.0, [1.0], grid=64)
    r = math.sqrt(math.exp(-1) - 1 / 3)
    assert all(math.hypot(*p) == pytest.approx(r, abs=1e-3) for p in lines[0]["points"])
    plane = renyi.entropy_plane_boundary(1.0, 2.0, 4, samples=11)
    assert len(plane["lower_cascade"]) == 3


@pytest.mark.parametrize(
    "args,name",
    [
        (["entropy", "--values", "[0.5,0.25,0.25]", "--q", "0.5"], "entropy"),
        (["bounds", "--h2", "0.98", "--h3", "0.92", "--n", "3"], "bounds"),
        (["extrapolate", "--h2", "0.98", "--h3", "0.92", "--n", "3", "--h0", "1.0986"], "extrapolate"),
    ],
)
def test_cli_output_matches_schema(args, name):
    jsonschema = pytest.importorskip("jsonschema")
    code, out, err = renyi.run_cli(args)
    assert code == 0, err
    jsonschema.validate(json.loads(out), schema(name))


@pytest.mark.parametrize(
    "fig,extra,name",
    [
        (1, ["--grid", "32"], "figure1"),
        (2, ["--n", "4", "--samples", "11"], "figure2"),
        (3, [], "figure3"),
        (4, ["--count", "500"], "deviation_stats"),
    ],
)
def test_figure_files_match_schema(tmp_path, fig, extra, name):
    jsonschema = pytest.importorskip("jsonschema")
    prefix = str(tmp_path / f"fig{fig}")
    code, out, err = renyi.run_cli(["figure", "--id", str(fig), "--out", prefix, *extra])
    assert code == 0, err
    jsonschema.validate(json.loads(pathlib.Path(prefix + ".json").read_text()), schema(name))
    assert pathlib.Path(prefix + ".csv").read_text().count("\n") > 1


def test_cli_error_is_json():
    code, out, err = renyi.run_cli(["entropy", "--values", "0.5,0.6"])
    assert code == 2
    assert json.loads(err)["error"] == "NotNormalized"
