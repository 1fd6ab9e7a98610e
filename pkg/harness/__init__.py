"""
Harness - differential verification and benchmark matrix
"""
from .suites import VerifyCase, build_suite
from .verify import VerifyResult, check_case, cmd_verify
from .bench import BenchRecord, BENCH_HEADER, SummaryRow, cmd_bench, format_summary

__all__ = [
    'VerifyCase',
    'build_suite',
    'VerifyResult',
    'check_case',
    'cmd_verify',
    'BenchRecord',
    'BENCH_HEADER',
    'SummaryRow',
    'cmd_bench',
    'format_summary',
]
