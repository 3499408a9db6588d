# Shared fixtures and oracles for the tournaments test suite
