"""Cross-cutting services: trace buffering, worker fan-out, run manifests."""
