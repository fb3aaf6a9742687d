"""
Orchestrator module.
"""

from .runner import AnalysisRunner, AnalysisSource, VerificationOrchestrator, catalog_listing, verify_target

__all__ = ['AnalysisRunner', 'AnalysisSource', 'VerificationOrchestrator', 'catalog_listing', 'verify_target']
