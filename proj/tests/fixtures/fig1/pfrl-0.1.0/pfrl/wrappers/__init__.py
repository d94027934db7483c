from pfrl.wrappers.monitor import Monitor
