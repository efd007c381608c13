"""
KBlowup Services - Job dispatch for the command line
"""
from kblowup.services.job_service import Command, JobService, JobSpec, job_service, parse_range, read_spec_file

__all__ = [
    "Command",
    "JobService",
    "JobSpec",
    "job_service",
    "parse_range",
    "read_spec_file",
]
