"""Bundled word lists: masking name dictionary and sentiment lexicons."""
