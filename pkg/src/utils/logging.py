"""
Logging utilities for drgq.
Provides structured JSON logging of verification checks and optional Langfuse integration.
"""

import json
import logging
import os
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional


class StructuredLogger:
    """Structured JSON logger for verification stages."""

    def __init__(
        self,
        name: str,
        log_dir: str = "logs",
        enable_langfuse: bool = False,
        level: str = "INFO",
        console: bool = True,
        to_file: bool = True,
    ):
        """Initialize structured logger."""
        self.name = name
        self.log_dir = log_dir
        self.enable_langfuse = enable_langfuse

        self.logger = logging.getLogger(f"drgq.{name}")
        self.logger.setLevel(getattr(logging, str(level).upper(), logging.INFO))
        self.logger.propagate = False
        for handler in list(self.logger.handlers):
            self.logger.removeHandler(handler)

        self.log_file: Optional[str] = None
        if to_file:
            Path(log_dir).mkdir(parents=True, exist_ok=True)
            self.log_file = os.path.join(log_dir, f"{name}_{datetime.now().strftime('%Y%m%d_%H%M%S')}.jsonl")
            file_handler = logging.FileHandler(self.log_file)
            file_handler.setFormatter(logging.Formatter('%(message)s'))
            self.logger.addHandler(file_handler)

        # stdout carries reports
        if console:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(logging.Formatter('[%(levelname)s] %(message)s'))
            self.logger.addHandler(console_handler)

        self.langfuse_client = None
        if enable_langfuse:
            try:
                from langfuse import Langfuse
                self.langfuse_client = Langfuse()
            except Exception as exc:
                self.logger.warning(f"Langfuse not available ({exc}). Structured logging only.")

    def _emit(self, entry: Dict[str, Any], level: int = logging.INFO):
        entry = {"timestamp": datetime.now().isoformat(), **entry}
        self.logger.log(level, json.dumps(entry, default=str))

    def log_check_start(self, check: str, target: str, context: Optional[Dict[str, Any]] = None) -> str:
        """Log the start of a check; returns its trace id."""
        trace_id = f"{check}_{datetime.now().strftime('%Y%m%d%H%M%S%f')}"
        self._emit({
            "event": "check_start",
            "check": check,
            "target": target,
            "trace_id": trace_id,
            "context": context or {},
        })
        return trace_id

    def log_check_result(self, check: str, trace_id: str, status: str, detail: Any = None):
        """Log a check outcome."""
        self._emit({
            "event": "check_result",
            "check": check,
            "trace_id": trace_id,
            "status": status,
            "detail": str(detail)[:1000] if detail is not None else None,
        })
        if self.langfuse_client is not None:
            try:
                self.langfuse_client.create_event(
                    name=f"check:{check}",
                    metadata={"trace_id": trace_id, "status": status},
                )
            except Exception as exc:
                self.logger.debug(f"Langfuse event dropped: {exc}")

    def log_error(self, check: str, trace_id: str, error: str):
        """Log a check error."""
        self._emit({
            "event": "check_error",
            "check": check,
            "trace_id": trace_id,
            "error": error,
        }, logging.ERROR)

    def log_stage(self, stage: str, message: str):
        self._emit({"event": "stage", "stage": stage, "message": message})

    def log_metrics(self, metrics: Dict[str, Any]):
        """Log run metrics."""
        self._emit({"event": "metrics", "metrics": metrics})


_logger_instance: Optional[StructuredLogger] = None


def get_logger(name: str = "drgq", log_dir: str = "logs", **kwargs) -> StructuredLogger:
    """Get or create global logger instance."""
    global _logger_instance
    if _logger_instance is None:
        _logger_instance = StructuredLogger(name, log_dir, **kwargs)
    return _logger_instance


def reset_logger():
    global _logger_instance
    _logger_instance = None
