#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "vigil/bytes.hpp"
#include "vigil/payload.hpp"

#include "json.hpp"

namespace vigil {

/// The three message granularities a VFL job exchanges: job orchestration
/// commands, protocol variable synchronization, and the tensor bodies
/// carried inside variables.
enum class FlowLevel : uint8_t { Control = 0, Algorithm = 1, Data = 2 };

enum class TransferMode : uint8_t { Unary = 0, Stream = 1 };

const char* flow_level_name(FlowLevel f);
const char* transfer_mode_name(TransferMode m);

struct PartyId {
    enum Kind : uint8_t { Guest = 0, Host = 1, Coordinator = 2, External = 3 };
    Kind kind = Guest;
    std::string name;  // External only

    static PartyId guest() { return {Guest, {}}; }
    static PartyId host() { return {Host, {}}; }
    static PartyId coordinator() { return {Coordinator, {}}; }
    static PartyId external(std::string who) { return {External, std::move(who)}; }

    std::string str() const;
    static PartyId from_str(const std::string& s);

    bool operator==(const PartyId&) const = default;
    auto operator<=>(const PartyId&) const = default;
};

/// The universal intercepted message unit. Canonical serialization is
/// unique: equal fields produce identical bytes and therefore identical
/// hashes, which is what replay comparison relies on.
struct Envelope {
    std::string job_id;
    std::string task_id;
    uint64_t seq = 0;  // strictly increasing per (job, sender)
    FlowLevel flow = FlowLevel::Control;
    std::string variable;  // "<task>.<name>.<iteration>"
    PartyId src;
    PartyId dst;
    TransferMode mode = TransferMode::Unary;
    uint32_t partition_index = 0;
    uint32_t partition_total = 1;
    Bytes credential;
    Bytes payload;  // encoded Payload body
    int64_t sent_at_ns = 0;
    int64_t recv_at_ns = 0;

    void validate() const;  // throws std::invalid_argument on broken invariants
    Bytes serialize() const;
    static Envelope deserialize(std::span<const uint8_t> bytes);

    /// SHA-256 of the canonical serialization with both timestamps zeroed,
    /// so a replayed message hashes equal to the recorded one.
    Digest content_hash() const;

    nlohmann::json debug_json() const;

    bool operator==(const Envelope&) const = default;
};

/// Variables are flat strings namespaced as "<task>.<name>.<iteration>".
std::string make_variable(const std::string& task, const std::string& name, uint64_t iteration);
struct VariableParts {
    std::string task;
    std::string name;
    uint64_t iteration = 0;
    bool has_iteration = false;
};
VariableParts parse_variable(const std::string& variable);

}  // namespace vigil
