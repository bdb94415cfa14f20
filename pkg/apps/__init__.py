"""matrix_invariants 앱 패키지."""
