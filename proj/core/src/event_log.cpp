#include "vlcbeacon/event_log.hpp"

#include <ostream>

namespace vlcb {

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Enqueue: return "enqueue";
        case EventKind::Dequeue: return "dequeue";
        case EventKind::MemWrite: return "mem_write";
        case EventKind::MemRead: return "mem_read";
        case EventKind::EncodeStart: return "encode_start";
        case EventKind::FeLoad: return "fe_load";
        case EventKind::PisoWrap: return "piso_wrap";
        case EventKind::Error: return "error";
    }
    return "?";
}

void write_event_csv(std::ostream& out, const std::vector<Event>& events) {
    out << "cycle,event,anchor,detail\n";
    for (const Event& e : events) {
        out << e.cycle << ',' << to_string(e.kind) << ',' << e.anchor << ',' << e.detail << '\n';
    }
}

}  // namespace vlcb
