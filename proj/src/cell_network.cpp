#include "nodesense/cell_network.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nodesense/errors.hpp"

namespace nodesense::cellnet {

namespace {

// Internal consistency check, run after every scripted event. A failure
// here is a simulator bug, not a caller error.
void check_invariants(const CellState& cell, std::uint64_t first_ip, std::uint64_t block_size) {
    if (cell.leader.has_value() != !cell.members.empty())
        throw std::logic_error("leader must be present iff the cell has members");
    if (cell.leader &&
        std::find(cell.members.begin(), cell.members.end(), *cell.leader) == cell.members.end())
        throw std::logic_error("leader must be a member");
    if (cell.table.entries.size() != cell.members.size())
        throw std::logic_error("routing table size must match membership");
    std::set<std::uint64_t> seen;
    for (const auto& [node, ip] : cell.table.entries)
        if (!seen.insert(ip).second)
            throw std::logic_error("duplicate assigned IP");
    for (std::uint64_t ip : cell.free_ips)
        if (!seen.insert(ip).second)
            throw std::logic_error("IP is both assigned and free");
    if (seen.size() != block_size)
        throw std::logic_error("IP block leaked or grew");
    for (std::uint64_t ip : seen)
        if (ip < first_ip || ip >= first_ip + block_size)
            throw std::logic_error("IP outside the cell's block");
}

}  // namespace

CellState make_cell(int cell_id, std::uint64_t first_ip, std::uint64_t block_size) {
    CellState cell;
    cell.cell_id = cell_id;
    for (std::uint64_t i = 0; i < block_size; ++i)
        cell.free_ips.push_back(first_ip + i);
    return cell;
}

std::pair<CellState, LogEntry> join(const CellState& state, const NodeId& node) {
    if (node.empty())
        throw DomainError("bad_node", "node id must be nonempty");
    if (std::find(state.members.begin(), state.members.end(), node) != state.members.end())
        throw DomainError("duplicate_join", "node '" + node + "' is already a member of cell " +
                                                std::to_string(state.cell_id));
    if (state.free_ips.empty())
        throw DomainError("pool_exhausted", "cell " + std::to_string(state.cell_id) +
                                                " has no free IP addresses");

    CellState next = state;
    const std::uint64_t ip = next.free_ips.front();
    next.free_ips.pop_front();
    next.members.push_back(node);
    const bool first_joiner = next.members.size() == 1;
    if (first_joiner)
        next.leader = node;
    next.table.entries.emplace(node, ip);
    next.table.version += 1;

    LogEntry entry;
    entry.op = EventOp::Join;
    entry.cell = state.cell_id;
    entry.node = node;
    entry.result = first_joiner ? "joined_leader" : "joined";
    entry.leader = next.leader;
    entry.version = next.table.version;
    entry.ip = ip;
    entry.sent_table = next.table;
    return {std::move(next), std::move(entry)};
}

std::pair<CellState, LogEntry> leave(const CellState& state, const NodeId& node) {
    const auto member = std::find(state.members.begin(), state.members.end(), node);
    if (member == state.members.end())
        throw DomainError("not_a_member", "node '" + node + "' is not a member of cell " +
                                              std::to_string(state.cell_id));

    CellState next = state;
    const auto table_entry = next.table.entries.find(node);
    const std::uint64_t ip = table_entry->second;
    next.table.entries.erase(table_entry);
    next.free_ips.push_back(ip);
    next.members.erase(std::find(next.members.begin(), next.members.end(), node));
    const bool was_leader = state.leader && *state.leader == node;

    LogEntry entry;
    entry.op = EventOp::Leave;
    entry.cell = state.cell_id;
    entry.node = node;
    if (next.members.empty()) {
        next.leader.reset();
        entry.result = "left_empty";
    } else if (was_leader) {
        next.leader = next.members.back();
        entry.result = "left_handoff";
    } else {
        entry.result = "left";
    }
    entry.leader = next.leader;
    entry.version = next.table.version;
    entry.ip = ip;
    return {std::move(next), std::move(entry)};
}

SimulationResult run_script(std::span<const Event> events,
                            const coverage::IpAllocation& allocation, int cell_count) {
    if (cell_count < 1)
        throw DomainError("bad_config", "cell count must be >= 1");
    if (allocation.cells != static_cast<std::uint64_t>(cell_count))
        throw DomainError("bad_config", "allocation was made for " +
                                            std::to_string(allocation.cells) + " cells, not " +
                                            std::to_string(cell_count));

    SimulationResult result;
    result.cells.reserve(static_cast<std::size_t>(cell_count));
    for (int c = 0; c < cell_count; ++c)
        result.cells.push_back(
            make_cell(c, static_cast<std::uint64_t>(c) * allocation.per_cell, allocation.per_cell));

    std::map<NodeId, int> located;  // node -> cell it currently occupies
    std::optional<std::uint64_t> last_time;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const Event& event = events[i];
        try {
            if (last_time && event.time <= *last_time)
                throw DomainError("bad_event", "timestamps must be strictly increasing");
            last_time = event.time;
            if (event.cell < 0 || event.cell >= cell_count)
                throw DomainError("bad_event",
                                  "cell index " + std::to_string(event.cell) + " out of range");

            if (event.op == EventOp::Join) {
                const auto occupied = located.find(event.node);
                if (occupied != located.end())
                    throw DomainError("duplicate_join",
                                      "node '" + event.node + "' is already a member of cell " +
                                          std::to_string(occupied->second));
                auto [next, entry] = join(result.cells[static_cast<std::size_t>(event.cell)],
                                          event.node);
                result.cells[static_cast<std::size_t>(event.cell)] = std::move(next);
                located.emplace(event.node, event.cell);
                entry.time = event.time;
                result.log.push_back(std::move(entry));
            } else {
                auto [next, entry] = leave(result.cells[static_cast<std::size_t>(event.cell)],
                                           event.node);
                result.cells[static_cast<std::size_t>(event.cell)] = std::move(next);
                located.erase(event.node);
                entry.time = event.time;
                result.log.push_back(std::move(entry));
            }
            check_invariants(result.cells[static_cast<std::size_t>(event.cell)],
                             static_cast<std::uint64_t>(event.cell) * allocation.per_cell,
                             allocation.per_cell);
        } catch (const DomainError& e) {
            throw DomainError(e.code(), "event " + std::to_string(i) + ": " + e.what());
        }
    }
    return result;
}

const char* to_string(EventOp op) noexcept {
    return op == EventOp::Join ? "join" : "leave";
}

}  // namespace nodesense::cellnet
