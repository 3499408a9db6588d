# Test package for the tournaments toolkit
