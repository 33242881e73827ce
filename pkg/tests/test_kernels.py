import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcstructures import kernels
from gcstructures.kernels import _kernels_py
from gcstructures.rootsys import build_root_system

try:
    from gcstructures import _kernels as compiled
except ImportError:  # pragma: no cover
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernel not built")


def tables(rs):
    return (len(rs.roots),) + tuple(rs._pair_tables) + tuple(rs._sum_tables)


def test_backend_env_override():
    env = dict(os.environ, GCSTRUCTURES_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from gcstructures.kernels import BACKEND; print(BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("python", "cython")


@needs_compiled
@pytest.mark.parametrize("s,n", [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("C", 3)])
def test_compiled_matches_python(s, n):
    rs = build_root_system(s, n)
    t = tables(rs)
    pos = rs.positive_mask
    for fin, fout in [(0, 0), (1 << rs.simple_indices[0], 0), (0, pos)]:
        assert compiled.closed_masks(*t, fin, fout) == _kernels_py.closed_masks(*t, fin, fout)


@needs_compiled
@given(st.integers(min_value=0, max_value=(1 << 18) - 1))
def test_is_closed_mask_agrees_b3(mask):
    rs = build_root_system("B", 3)
    n = len(rs.roots)
    ps, pj, pk = rs._pair_tables
    assert compiled.is_closed_mask(mask, n, ps, pj, pk) == _kernels_py.is_closed_mask(mask, n, ps, pj, pk)


def test_forced_masks_respected():
    rs = build_root_system("A", 2)
    t = tables(rs)
    fin = 1 << rs.parse_root("a1")
    fout = 1 << rs.parse_root("a2")
    out = kernels.closed_masks(*t, fin, fout)
    assert out and all(m & fin == fin and m & fout == 0 for m in out)
