import os
import subprocess
import sys

import numpy as np
import pytest

from dicomp import _backend, _core_available, _pure
from dicomp.fixtures import FIG1, FIG3, FIG4
from dicomp.oracle import sample_digraphs

HAS_CORE = _core_available()
needs_core = pytest.mark.skipif(not HAS_CORE,
                                reason="compiled extension not built")


def test_active_backend_exposes_kernels():
    assert _backend.BACKEND in ("pure", "compiled")
    assert callable(_backend.class_labels)
    assert callable(_backend.compose_scan)


@needs_core
def test_class_labels_backends_agree_fixtures():
    from dicomp import _core
    for d in (FIG1, FIG3, FIG4):
        adj = np.ascontiguousarray(d.adj)
        assert (_core.class_labels(adj) == _pure.class_labels(adj)).all()


@needs_core
def test_class_labels_backends_agree_random():
    from dicomp import _core
    for d in sample_digraphs(8, 50, seed=13):
        adj = np.ascontiguousarray(d.adj)
        assert (_core.class_labels(adj) == _pure.class_labels(adj)).all()
    for d in sample_digraphs(8, 50, seed=14, semicomplete_only=True):
        adj = np.ascontiguousarray(d.adj)
        assert (_core.class_labels(adj) == _pure.class_labels(adj)).all()


@needs_core
def test_compose_scan_backends_agree():
    from dicomp import _core
    rng = np.random.default_rng(21)
    for d in sample_digraphs(7, 40, seed=15, semicomplete_only=True):
        n = d.n
        adj = np.ascontiguousarray(d.adj)
        labels = _pure.class_labels(adj)
        num = int(labels.max()) + 1
        slots = np.flatnonzero(labels >= 0)
        chosen = rng.choice(slots, size=min(6, len(slots)), replace=False)
        t = np.zeros((n, n), dtype=np.uint8)
        for s in chosen:
            t[s // n, s % n] = 1
        new = np.asarray(sorted(int(s) for s in chosen), dtype=np.int32)
        args = lambda: (adj, labels, t,
                        new, np.ones(num, dtype=np.uint8),
                        np.zeros(num, dtype=np.uint8))
        out_pure = _pure.compose_scan(*args())
        out_core = _core.compose_scan(*args())
        assert (out_pure == out_core).all()


def test_pure_env_override_forces_pure_backend():
    code = ("import dicomp; from dicomp.fixtures import FIXTURES; "
            "print(dicomp.BACKEND); "
            "r = dicomp.recognize_semicomplete(FIXTURES['fig4']); "
            "print(r.verdict, *r.ordering.perm)")
    env = dict(os.environ, DICOMP_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    lines = out.stdout.split()
    assert lines[0] == "pure"
    assert lines[1] == "comparability"


@needs_core
def test_full_recognition_identical_across_backends():
    code = ("import dicomp\n"
            "from dicomp.oracle import sample_digraphs\n"
            "for d in sample_digraphs(9, 25, seed=17, "
            "semicomplete_only=True):\n"
            "    r = dicomp.recognize_semicomplete(d)\n"
            "    print(r.verdict, r.ordering.perm if r.ordering else None)\n")
    outs = []
    for pure in ("0", "1"):
        env = dict(os.environ, DICOMP_PURE=pure)
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True, check=True)
        outs.append(out.stdout)
    assert outs[0] == outs[1]
