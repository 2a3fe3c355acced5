"""Hook specifications for unruh-bench plugins.

Plugins implement these hooks with the @hookimpl decorator to write extra output files for a
run. Every hook receives plain dicts, so a plugin never needs the numerical packages.

Example plugin implementation:

    from unruh_bench import hookimpl

    @hookimpl
    def register_sweep_renderer(sweep):
        peak = sweep["peak_negativity"]
        return {"filename": "peak.txt", "content": f"{peak}\\n"}
"""

from types import ModuleType

import pluggy

hookspec = pluggy.HookspecMarker("unruh_bench")


class RendererSpec:
    """Hook specifications for result renderer plugins.

    Plugins implement these hooks to generate output files from sweeps, spread reports and
    engine cross-checks. Each hook uses Pluggy's dependency injection - plugins only need to
    declare the parameters they actually use.
    """

    @hookspec
    def register_sweep_renderer(
        self,
        unruh_bench: ModuleType,
        sweep: dict,
        manifest: dict,
    ) -> dict | None:  # type: ignore[empty-body]
        """Render the results of a negativity sweep.

        Called once after every sweep point has been evaluated. Generates output files
        written to the --out directory.

        Args:
            unruh_bench: The unruh_bench module with helper functions:
                - format_float(value): Shortest round-trip float text, "" for None
                - manifest_hash(data): sha256 of canonical JSON
            sweep: SweepResult dict
                - engine: "peaked" or "brute"
                - counts: Points per status (ok, warn, invalid, failed)
                - parseval_defect_x / parseval_defect_y: Spread defects at the reference acceleration
                - peak_a_proper_m_per_s2 / peak_negativity: Largest negativity, or None
                - interior_maximum: Whether the curve peaks strictly inside the window
                - points: SweepPoint dicts ordered by acceleration, keyed by the sweep CSV
                  columns plus status and error_message
            manifest: RunManifest dict
                - tool, version, command
                - manifest_sha256: Hash embedded in every output file
                - config: Flattened resolved configuration
                - diagnostics: Per-point validity ratio, truncation loss and Parseval defect
                - timing: Wall-clock seconds per stage (only with --record-timing)

        Returns:
            Dict with 'filename' and 'content' keys, or None to skip rendering.

        Example implementation:
            @hookimpl
            def register_sweep_renderer(sweep, manifest):
                rows = [(p["a_proper_m_per_s2"], p["negativity"]) for p in sweep["points"]]
                return {
                    "filename": "negativity.json",
                    "content": json.dumps({"hash": manifest["manifest_sha256"], "rows": rows}),
                }
        """
        ...

    @hookspec
    def register_spread_renderer(
        self,
        unruh_bench: ModuleType,
        spread: dict,
        manifest: dict,
    ) -> dict | None:  # type: ignore[empty-body]
        """Render a spread report.

        Args:
            unruh_bench: The unruh_bench module with helper functions
            spread: SpreadReport dict
                - samples: Rows keyed by a_proper_m_per_s2 plus the spread columns, one per
                  acceleration, evaluated at the detector centre
                - profiles: Rows of the full profiles, keyed the same way
                - profile_defects: Parseval defect per profile acceleration
            manifest: RunManifest dict

        Returns:
            Dict with 'filename' and 'content' keys, or None to skip rendering.
        """
        ...

    @hookspec
    def register_oracle_renderer(
        self,
        unruh_bench: ModuleType,
        report: dict,
        manifest: dict,
    ) -> dict | None:  # type: ignore[empty-body]
        """Render an engine cross-check.

        Args:
            unruh_bench: The unruh_bench module with helper functions
            report: OracleReport dict
                - a_proper_m_per_s2, omega_det_dimensionless, n_max
                - passed: Every distance below tolerance
                - rows: Per bin count trace distance, tolerance and status (ok, mismatch, refused)
                - costs: Per bin count modes, predicted support and a(n)^m witness
                  (runtime_s and fitted_base only with --record-timing)
            manifest: RunManifest dict

        Returns:
            Dict with 'filename' and 'content' keys, or None to skip rendering.
        """
        ...
