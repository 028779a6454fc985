"""Drives the installed CLI through the synth -> analyze -> evaluate chain
to prove the subcommands compose on each other's artifacts. Needs the
binary path in ECHOMAP_CLI (ctest sets it); skipped otherwise."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("ECHOMAP_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="ECHOMAP_CLI not set")


def run(*args):
    return subprocess.run([CLI, *list(args)], check=True,
                          capture_output=True, text=True)


def test_analyze_artifacts_feed_evaluate(tmp_path):
    synth = tmp_path / "synth"
    run("synth", "--seed", "3", "--out", str(synth))

    analysis = tmp_path / "analysis"
    run("analyze", "--slab", str(synth / "slab.json"), "--out", str(analysis))

    # The mask PGM is written at the upscaled view resolution; evaluate
    # must accept it against the cell-resolution score grid regardless.
    scored = tmp_path / "scored"
    run("evaluate",
        "--dm", str(analysis / "binary_mask.pgm"),
        "--scores", str(analysis / "grid_low.csv"),
        "--defects", str(synth / "defects.json"),
        "--mask-type", "binary",
        "--out", str(scored))

    metrics = json.loads((scored / "metrics.json").read_text())
    assert metrics["mask_type"] == "binary"
    assert metrics["f1"] == 1.0  # zero-noise synth recovers exactly
    assert (scored / "roc.csv").exists()
    assert (scored / "overlay.ppm").exists()


def test_evaluate_rejects_incommensurate_mask(tmp_path):
    synth = tmp_path / "synth"
    run("synth", "--rows", "4", "--cols", "7", "--out", str(synth))
    analysis = tmp_path / "analysis"
    run("analyze", "--slab", str(synth / "slab.json"), "--upscale", "3",
        "--out", str(analysis))

    # A 5-column grid cannot tile the 21-pixel-wide mask raster.
    bad = tmp_path / "bad.csv"
    rows = ["1000,2000,3000,4000,5000"] * 4
    bad.write_text("\n".join(rows) + "\n")

    with pytest.raises(subprocess.CalledProcessError) as err:
        run("evaluate",
            "--dm", str(analysis / "binary_mask.pgm"),
            "--scores", str(bad),
            "--defects", str(synth / "defects.json"),
            "--out", str(tmp_path / "scored"))
    assert "neither at score-grid resolution" in err.value.stderr
