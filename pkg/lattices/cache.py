from __future__ import annotations

import json
import logging
import os
import tempfile
import threading
from pathlib import Path
from typing import Optional, Union

from hecke.satake import HeckeElement
from hecke.weights import DominantCoweight

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


class CacheFormatError(RuntimeError):
    """Raised when a cache entry belongs to a different key than its file name says."""


class ConvolutionCache:
    """One JSON file per (p, mu, nu) convolution; writes are exclusive and atomic."""

    _write_lock = threading.Lock()

    def __init__(self, directory: Union[str, os.PathLike]) -> None:
        self.directory = Path(directory)

    @staticmethod
    def _slug(nu: DominantCoweight) -> str:
        return "_".join(str(a) for a in nu)

    def path_for(self, p: int, mu: DominantCoweight, nu: DominantCoweight) -> Path:
        return self.directory / f"convolve_p{p}_{self._slug(mu)}__{self._slug(nu)}.json"

    def load(self, p: int, mu: DominantCoweight, nu: DominantCoweight) -> Optional[HeckeElement]:
        path = self.path_for(p, mu, nu)
        if not path.exists():
            logger.info("cache miss for p=%s %s * %s", p, mu, nu)
            return None
        try:
            payload = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, UnicodeDecodeError, json.JSONDecodeError):
            logger.warning("ignoring unreadable cache entry %s", path)
            return None
        if payload.get("format_version") != FORMAT_VERSION:
            logger.warning("ignoring cache entry %s with format %r", path, payload.get("format_version"))
            return None
        if (payload.get("p"), payload.get("mu"), payload.get("nu")) != (p, mu.render(), nu.render()):
            raise CacheFormatError(f"cache entry {path} does not describe p={p} {mu} * {nu}")
        try:
            terms = {
                DominantCoweight.parse(key): int(value)
                for key, value in payload.get("coefficients", {}).items()
            }
        except (AttributeError, TypeError, ValueError) as exc:
            logger.warning("ignoring cache entry %s with bad coefficients: %s", path, exc)
            return None
        logger.info("cache hit for p=%s %s * %s", p, mu, nu)
        return HeckeElement(terms)

    def store(self, p: int, mu: DominantCoweight, nu: DominantCoweight, element: HeckeElement) -> Path:
        payload = {
            "format_version": FORMAT_VERSION,
            "p": p,
            "mu": mu.render(),
            "nu": nu.render(),
            "coefficients": {key.render(): str(value) for key, value in element.integer_coefficients().items()},
        }
        path = self.path_for(p, mu, nu)
        with self._write_lock:
            self.directory.mkdir(parents=True, exist_ok=True)
            handle = tempfile.NamedTemporaryFile(
                "w", encoding="utf-8", dir=self.directory, suffix=".tmp", delete=False
            )
            try:
                with handle:
                    json.dump(payload, handle, sort_keys=True, indent=2)
                os.replace(handle.name, path)
            except BaseException:
                Path(handle.name).unlink(missing_ok=True)
                raise
        return path
