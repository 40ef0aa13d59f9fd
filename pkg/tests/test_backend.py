import os
import subprocess
import sys

import pytest
from hypothesis import given

from qyangian import _backend, _kernel_py
from qyangian.pbw import GeneratorOrder, algebra

from strategies import words

compiled = pytest.mark.skipif(_backend.BACKEND != "cython", reason="compiled kernel not built")


def _kernels(K, kind="lex"):
    alg = algebra(GeneratorOrder(kind, K))
    args = (alg.parity, alg.kernel.bracket, alg.kernel.square)
    return alg, _kernel_py.Straightener(*args), _backend.Straightener(*args)


@compiled
def test_compiled_kernel_selected_by_default():
    assert _backend.BACKEND == "cython"


def test_pure_python_override():
    env = dict(os.environ, QYANGIAN_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import qyangian; print(qyangian.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@compiled
@given(words(3, 6))
def test_kernels_agree_lex(word):
    alg, py, cy = _kernels(3)
    ranks = [alg.rank_of(i, j) for i, j in word]
    assert py.mul_word(ranks) == cy.mul_word(ranks)


@compiled
@given(words(2, 6))
def test_kernels_agree_hc(word):
    alg, py, cy = _kernels(2, "hc")
    ranks = [alg.rank_of(i, j) for i, j in word]
    assert py.mul_word(ranks) == cy.mul_word(ranks)


@compiled
def test_kernels_agree_on_products():
    alg, py, cy = _kernels(2)
    a = py.mul_word([0, 3, 5])
    b = py.mul_word([7, 1])
    assert py.mul_terms(a, b) == cy.mul_terms(a, b)


def test_cache_clear():
    _, py, _ = _kernels(1)
    py.mul_word([1, 0, 1])
    assert py.cache_size() > 0
    py.clear()
    assert py.cache_size() == 0
