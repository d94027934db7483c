import trading_calendars
