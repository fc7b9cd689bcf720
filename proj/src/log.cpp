#include "abducta/log.hpp"

#include <algorithm>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <json.hpp>

namespace abducta {

using nlohmann::json;

Trace make_trace(const std::vector<EventSpec>& events) {
  Trace t;
  int id = 0;
  for (const auto& [act, ts] : events) {
    ObservedEvent e;
    e.id = id++;
    e.activity = act;
    e.timestamp = ts;
    t.events.push_back(std::move(e));
  }
  return t;
}

namespace {

std::pair<int, int> line_col_of(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void throw_parse_error(const std::string& msg, const std::string& text,
                                    std::size_t byte) {
  auto [line, col] = line_col_of(text, byte);
  throw ParseError(msg + " at line " + std::to_string(line) + ", column " +
                       std::to_string(col),
                   line, col);
}

json parse_json_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw_parse_error(std::string("invalid JSON: ") + e.what(), text,
                      e.byte > 0 ? e.byte - 1 : 0);
  }
}

ObservedEvent event_from_json(const json& entry, int id, const std::string& text) {
  if (!entry.is_array() || entry.size() != 2)
    throw_parse_error("event must be a [activity, timestamp] pair", text, 0);
  ObservedEvent e;
  e.id = id;
  const json& act = entry[0];
  const json& ts = entry[1];
  if (act.is_string()) {
    e.activity = act.get<std::string>();
    if (e.activity->empty())
      throw_parse_error("activity name must be non-empty or null", text, 0);
  } else if (!act.is_null()) {
    throw_parse_error("activity must be a string or null", text, 0);
  }
  if (ts.is_number_integer()) {
    long long v = ts.get<long long>();
    if (v < 0)
      throw NegativeTimestamp("timestamp must be a natural number, got " +
                                  std::to_string(v),
                              1, 1);
    e.timestamp = v;
  } else if (!ts.is_null()) {
    throw_parse_error("timestamp must be a non-negative integer or null", text, 0);
  }
  return e;
}

Trace trace_from_json(const json& arr, const std::string& text) {
  if (!arr.is_array()) throw_parse_error("trace must be a JSON array", text, 0);
  Trace t;
  int id = 0;
  for (const json& entry : arr) t.events.push_back(event_from_json(entry, id++, text));
  return t;
}

json trace_to_json(const Trace& t) {
  json arr = json::array();
  for (const ObservedEvent& e : t.events) {
    json pair = json::array();
    pair.push_back(e.activity ? json(*e.activity) : json(nullptr));
    pair.push_back(e.timestamp ? json(*e.timestamp) : json(nullptr));
    arr.push_back(std::move(pair));
  }
  return arr;
}

// Sortable key for the ISO-8601 subset used by XES exports. Fractional
// seconds and timezone suffixes are ignored.
std::string date_key(const std::string& iso) {
  std::string key;
  for (char c : iso) {
    if (key.size() >= 19) break;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == ':' || c == 'T')
      key.push_back(c);
    else
      break;
  }
  return key;
}

struct XesEvent {
  std::optional<ActivityId> activity;
  std::optional<TimePoint> int_timestamp;
  std::optional<std::string> date_timestamp;
};

EventLog parse_xes(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError(std::string("invalid XES XML: ") + e.message(),
                     static_cast<int>(e.line()), 1);
  }

  auto log_node = tree.get_child_optional("log");
  if (!log_node) throw ParseError("XES document has no <log> root element", 1, 1);

  EventLog log;
  for (const auto& [trace_tag, trace_node] : *log_node) {
    if (trace_tag != "trace") continue;
    std::vector<XesEvent> events;
    bool any_date = false, any_int = false;
    for (const auto& [event_tag, event_node] : trace_node) {
      if (event_tag != "event") continue;
      XesEvent ev;
      for (const auto& [attr_tag, attr_node] : event_node) {
        if (attr_tag == "<xmlattr>") continue;
        auto key = attr_node.get_optional<std::string>("<xmlattr>.key");
        auto value = attr_node.get_optional<std::string>("<xmlattr>.value");
        if (!key || !value) continue;
        if (*key == "concept:name" && attr_tag == "string") {
          ev.activity = *value;
        } else if (*key == "time:timestamp") {
          if (attr_tag == "int") {
            long long v = 0;
            try {
              v = std::stoll(*value);
            } catch (const std::exception&) {
              throw ParseError("non-integer time:timestamp value: " + *value, 1, 1);
            }
            if (v < 0)
              throw NegativeTimestamp("timestamp must be a natural number, got " + *value,
                                      1, 1);
            ev.int_timestamp = v;
            any_int = true;
          } else if (attr_tag == "date") {
            ev.date_timestamp = date_key(*value);
            any_date = true;
          }
        }
      }
      events.push_back(std::move(ev));
    }
    if (any_date && any_int)
      throw ParseError("trace mixes integer and date timestamps", 1, 1);

    Trace t;
    if (any_date) {
      // Map wall-clock instants to naturals by rank within the trace; equal
      // instants map to equal naturals.
      std::vector<std::string> keys;
      for (const auto& ev : events)
        if (ev.date_timestamp) keys.push_back(*ev.date_timestamp);
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      int id = 0;
      for (const auto& ev : events) {
        ObservedEvent e;
        e.id = id++;
        e.activity = ev.activity;
        if (ev.date_timestamp) {
          auto it = std::lower_bound(keys.begin(), keys.end(), *ev.date_timestamp);
          e.timestamp = static_cast<TimePoint>(it - keys.begin());
        }
        t.events.push_back(std::move(e));
      }
    } else {
      int id = 0;
      for (const auto& ev : events) {
        ObservedEvent e;
        e.id = id++;
        e.activity = ev.activity;
        e.timestamp = ev.int_timestamp;
        t.events.push_back(std::move(e));
      }
    }
    log.traces.push_back(std::move(t));
  }
  return log;
}

}  // namespace

Trace parse_trace(const std::string& text) {
  return trace_from_json(parse_json_or_throw(text), text);
}

EventLog parse_log(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '<') return parse_xes(text);

  json doc = parse_json_or_throw(text);
  if (!doc.is_array()) throw_parse_error("log must be a JSON array of traces", text, 0);
  EventLog log;
  for (const json& tr : doc) log.traces.push_back(trace_from_json(tr, text));
  return log;
}

std::string serialize_trace(const Trace& trace) { return trace_to_json(trace).dump(); }

std::string serialize_log(const EventLog& log) {
  json arr = json::array();
  for (const Trace& t : log.traces) arr.push_back(trace_to_json(t));
  return arr.dump();
}

}  // namespace abducta
