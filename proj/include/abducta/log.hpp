#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abducta/types.hpp"

namespace abducta {

/// One logged event. Identity is always present; activity and timestamp may
/// each be absent, giving the four shapes (A,t), (A,_), (_,t), (_,_).
struct ObservedEvent {
  int id = 0;
  std::optional<ActivityId> activity;
  std::optional<TimePoint> timestamp;

  bool complete() const { return activity.has_value() && timestamp.has_value(); }
};

/// An unordered collection of events; ordering is induced only by timestamps.
struct Trace {
  std::vector<ObservedEvent> events;
};

struct EventLog {
  std::vector<Trace> traces;
};

using EventSpec = std::pair<std::optional<ActivityId>, std::optional<TimePoint>>;

Trace make_trace(const std::vector<EventSpec>& events);

/// Parses a trace from a JSON array of [activity, timestamp] pairs where
/// either slot may be null. Throws ParseError / NegativeTimestamp.
Trace parse_trace(const std::string& text);

/// Parses a log from either the JSON array-of-traces format or an XES-subset
/// XML document (log/trace/event elements, extensions ignored).
EventLog parse_log(const std::string& text);

std::string serialize_trace(const Trace& trace);
std::string serialize_log(const EventLog& log);

}  // namespace abducta
