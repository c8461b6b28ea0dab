"""Shared test configuration: deterministic, deadline-free hypothesis runs."""

import hypothesis

hypothesis.settings.register_profile(
    "causalgap",
    deadline=None,
    max_examples=60,
    derandomize=True,
)
hypothesis.settings.load_profile("causalgap")
