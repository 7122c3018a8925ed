from __future__ import annotations

import json
import os
import sys

import pytest

sys.path.append(os.path.dirname(os.path.dirname(__file__)))

from app import create_app  # noqa: E402
from config import TestConfig  # noqa: E402


@pytest.fixture
def app(tmp_path):
    class _Config(TestConfig):
        HECKE_CACHE_DIR = str(tmp_path / "cache")

    return create_app(_Config)


@pytest.fixture
def app_context(app):
    with app.app_context():
        yield app


@pytest.fixture
def runner(app):
    return app.test_cli_runner(mix_stderr=False)


@pytest.fixture
def eigen_file(tmp_path):
    def _write(payload, name="eigens.json"):
        path = tmp_path / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
        return path

    return _write
