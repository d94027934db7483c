import legacy_only
