#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nodesense/coverage.hpp"

namespace nodesense::cellnet {

/// Opaque node identifier; nonempty and unique among current members.
using NodeId = std::string;

/// Versioned routing table. The version goes up by exactly one per
/// successful join (and only then); entries map members to their
/// assigned IPs, which are pairwise distinct.
struct RoutingTable {
    std::uint64_t version = 0;
    std::map<NodeId, std::uint64_t> entries;
};

/// One cell. `members` is in join order, oldest joiner first. The free
/// IP pool is a queue: the front entry is assigned next, and released
/// IPs rejoin at the back (FIFO reuse). The leader is the first joiner
/// until a leader departure promotes the most recent joiner.
struct CellState {
    int cell_id = 0;
    std::deque<std::uint64_t> free_ips;
    std::vector<NodeId> members;
    std::optional<NodeId> leader;
    RoutingTable table;
};

enum class EventOp { Join, Leave };

struct Event {
    std::uint64_t time = 0;
    EventOp op = EventOp::Join;
    int cell = 0;
    NodeId node;
};

/// Outcome of one applied event. `result` is one of:
/// joined | joined_leader | left | left_handoff | left_empty.
/// `leader` and `version` reflect the cell after the event; `ip` is the
/// address assigned (join) or released (leave). For joins, `sent_table`
/// is the routing-table snapshot handed to the joining node.
struct LogEntry {
    std::uint64_t time = 0;
    EventOp op = EventOp::Join;
    int cell = 0;
    NodeId node;
    std::string result;
    std::optional<NodeId> leader;
    std::uint64_t version = 0;
    std::uint64_t ip = 0;
    std::optional<RoutingTable> sent_table;
};

/// A fresh cell owning the IP block [first_ip, first_ip + block_size).
CellState make_cell(int cell_id, std::uint64_t first_ip, std::uint64_t block_size);

/// Adds a node: it receives the IP at the front of the free pool and the
/// version goes up by one. The first joiner of an empty cell becomes its
/// leader. Errors: duplicate_join, pool_exhausted.
std::pair<CellState, LogEntry> join(const CellState& state, const NodeId& node);

/// Removes a member and returns its IP to the back of the pool. When the
/// leader leaves a cell that stays nonempty, the member with the
/// greatest join order takes over; the version does not change.
std::pair<CellState, LogEntry> leave(const CellState& state, const NodeId& node);

struct SimulationResult {
    std::vector<CellState> cells;
    std::vector<LogEntry> log;
};

/// Folds the events over `cell_count` initially empty cells whose IP
/// blocks come from `allocation` (cell c owns
/// [c * per_cell, (c+1) * per_cell); remainder IPs stay in a global
/// reserve). Timestamps must be strictly increasing and a node may be a
/// member of at most one cell at a time. Any per-event error aborts with
/// the offending event index in the message; cell invariants are
/// re-checked after every event.
SimulationResult run_script(std::span<const Event> events,
                            const coverage::IpAllocation& allocation, int cell_count);

const char* to_string(EventOp op) noexcept;

}  // namespace nodesense::cellnet
