#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace vlcb {

enum class EventKind {
    Enqueue,
    Dequeue,
    MemWrite,
    MemRead,
    EncodeStart,
    FeLoad,
    PisoWrap,
    Error,
};

std::string_view to_string(EventKind kind);

/// One timestamped record in the simulator's log. `detail` never contains
/// commas so the CSV stays single-field.
struct Event {
    uint64_t cycle = 0;
    EventKind kind = EventKind::Enqueue;
    int64_t anchor = -1;  // -1 when no anchor applies
    std::string detail;

    bool operator==(const Event&) const = default;
};

/// CSV with header `cycle,event,anchor,detail`.
void write_event_csv(std::ostream& out, const std::vector<Event>& events);

}  // namespace vlcb
