from __future__ import annotations

import pytest

from dnc.rees import make_center

SUITE = {
    "C0": (("x",), ()),
    "C1": (("u",), ("u",)),
    "C2": (("x", "y"), ("x", "y")),
    "C3": (("x",), ("x", "x")),
    "C4": (("x", "y"), ("x^2", "x*y")),
    "CU": (("x",), ("1",)),
}


def center(label: str):
    amb, gens = SUITE[label]
    return make_center(amb, gens)


def problem_text(label: str) -> str:
    amb, gens = SUITE[label]
    return f"ring Q[{', '.join(amb)}];\ncenter ({', '.join(gens)});\n"


@pytest.fixture(autouse=True)
def _private_cache_dir(tmp_path, monkeypatch):
    # never touch the user's cache from the test suite
    monkeypatch.setenv("DNC_CACHE_DIR", str(tmp_path / "dnc-cache"))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        terminalreporter.write_line(results[k][2])
