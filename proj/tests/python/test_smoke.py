"""End-to-end smoke tests for the python bindings. The heavy numerical
verification lives in the C++ suites; these only prove the extension is
wired up: objects cross the boundary, errors map to python exceptions,
and the headline zero-noise recovery holds through the python API."""

import json
import math

import pytest

import echomap


def test_version_matches_package_metadata():
    assert echomap.__version__ == "0.1.0"


def test_synth_analyze_evaluate_roundtrip():
    cfg = echomap.SynthConfig()
    assert cfg.shape == echomap.GridShape(9, 28)
    assert cfg.defect_band_hz == [8000.0, 10000.0]
    assert cfg.defects is None  # default layout

    rec, spec = echomap.generate_slab(cfg)
    assert rec.slab_id == "synth-seed1"
    assert len(rec.readings) == 9 * 28
    assert len(rec.at(0, 0).amplitudes) == 2000
    assert spec.slab_id == rec.slab_id

    analysis = echomap.analyze(rec)
    assert analysis.histogram.k == echomap.bin_count(9 * 28)
    assert analysis.pair.low.f_end_hz < analysis.pair.high.f_start_hz

    result = echomap.evaluate_analysis(analysis, spec)
    # Zero noise and snapped tones: both masks recover the layout exactly.
    assert result.binary.f1 == 1.0
    assert result.cluster.f1 == 1.0
    assert result.roc.auc == 1.0
    assert result.binary.confusion.total() == spec.px_w * spec.px_h


def test_slab_json_roundtrip(tmp_path):
    rec = echomap.SlabRecording()
    rec.slab_id = "py-roundtrip"
    rec.shape = echomap.GridShape(1, 2)
    rec.readings = [
        echomap.TimeSeries(1000.0, [0.0, 0.25, -1.0 / 3.0]),
        echomap.TimeSeries(1000.0, [1.0, math.pi, 5e-324]),
    ]
    path = str(tmp_path / "slab.json")
    echomap.write_slab(rec, path)

    back = echomap.load_slab(path)
    assert back.slab_id == rec.slab_id
    assert back.shape == rec.shape
    assert [ts.amplitudes for ts in back.readings] == [
        ts.amplitudes for ts in rec.readings
    ]

    with pytest.raises(echomap.DataError):
        echomap.load_slab(str(tmp_path / "missing.json"))


def test_errors_surface_as_python_exceptions():
    with pytest.raises(echomap.DataError):
        echomap.snap_to_bin(-5.0, 500000.0, 2000)
    with pytest.raises(echomap.MethodError, match="degenerate"):
        echomap.build_histogram([5.0, 5.0, 5.0], 4)
    # DataError is a ValueError, MethodError a RuntimeError.
    assert issubclass(echomap.DataError, ValueError)
    assert issubclass(echomap.MethodError, RuntimeError)


def test_kmeans_and_masks():
    model = echomap.kmeans_1d([2.0, 3.0, 4.0, 20.0, 21.0, 22.0], 2)
    assert model.centroids_hz == [3.0, 21.0]
    assert model.defect_label == 0
    assert model.labels == [0, 0, 0, 1, 1, 1]

    grid = echomap.FrequencyGrid(echomap.GridShape(1, 4),
                                 [8000.0, 9000.0, 10000.0, 12000.0])
    mask, threshold = echomap.binary_mask(grid)
    assert threshold == 9500.0
    assert mask.values == [0, 0, 1, 1]


def test_metrics_undefined_cases_are_none():
    quiet = echomap.compute_metrics(echomap.ConfusionCounts(tn=4))
    assert quiet.iou is None and quiet.f1 is None
    assert quiet.fpr == 0.0 and quiet.tnr == 1.0

    m = echomap.compute_metrics(echomap.ConfusionCounts(tp=1, fp=1, tn=2))
    assert m.precision == 0.5 and m.recall == 1.0
    assert m.f1 == pytest.approx(2.0 / 3.0)


def test_report_emitters_produce_valid_json():
    rec, spec = echomap.generate_slab(echomap.SynthConfig())
    analysis = echomap.analyze(rec)

    hist = json.loads(echomap.histogram_report_json(analysis))
    assert hist["slab_id"] == "synth-seed1"
    assert len(hist["counts"]) == analysis.histogram.k

    cluster = json.loads(echomap.cluster_report_json(analysis))
    assert cluster["k"] == 2

    result = echomap.evaluate_analysis(analysis, spec)
    metrics = json.loads(echomap.metrics_json(rec.slab_id, "binary", result.binary))
    assert metrics["f1"] == 1.0
    assert metrics["mask_type"] == "binary"
