#include "vigil/envelope.hpp"

#include <stdexcept>

#include "vigil/wire.hpp"

namespace vigil {

namespace {
constexpr uint8_t kWireVersion = 1;
}

const char* flow_level_name(FlowLevel f) {
    switch (f) {
        case FlowLevel::Control: return "control";
        case FlowLevel::Algorithm: return "algorithm";
        case FlowLevel::Data: return "data";
    }
    return "?";
}

const char* transfer_mode_name(TransferMode m) {
    return m == TransferMode::Unary ? "unary" : "stream";
}

std::string PartyId::str() const {
    switch (kind) {
        case Guest: return "guest";
        case Host: return "host";
        case Coordinator: return "coordinator";
        case External: return "external:" + name;
    }
    return "?";
}

PartyId PartyId::from_str(const std::string& s) {
    if (s == "guest") return guest();
    if (s == "host") return host();
    if (s == "coordinator") return coordinator();
    if (s.rfind("external:", 0) == 0) return external(s.substr(9));
    throw std::invalid_argument("unknown party id: " + s);
}

void Envelope::validate() const {
    if (partition_total < 1) throw std::invalid_argument("partition total must be >= 1");
    if (partition_index >= partition_total)
        throw std::invalid_argument("partition index out of range");
    if (mode == TransferMode::Unary && partition_total != 1)
        throw std::invalid_argument("unary transfer must be a single partition");
    if (variable.empty()) throw std::invalid_argument("variable name empty");
}

Bytes Envelope::serialize() const {
    ByteWriter w;
    w.u8(kWireVersion);
    w.str(job_id);
    w.str(task_id);
    w.u64(seq);
    w.u8(static_cast<uint8_t>(flow));
    w.str(variable);
    w.u8(static_cast<uint8_t>(src.kind));
    w.str(src.name);
    w.u8(static_cast<uint8_t>(dst.kind));
    w.str(dst.name);
    w.u8(static_cast<uint8_t>(mode));
    w.u32(partition_index);
    w.u32(partition_total);
    w.bytes(as_span(credential));
    w.bytes(as_span(payload));
    w.i64(sent_at_ns);
    w.i64(recv_at_ns);
    return w.take();
}

Envelope Envelope::deserialize(std::span<const uint8_t> bytes) {
    ByteReader r(bytes);
    if (r.u8() != kWireVersion) throw WireError("unsupported wire version");
    Envelope e;
    e.job_id = r.str();
    e.task_id = r.str();
    e.seq = r.u64();
    uint8_t flow = r.u8();
    if (flow > 2) throw WireError("bad flow level");
    e.flow = static_cast<FlowLevel>(flow);
    e.variable = r.str();
    uint8_t sk = r.u8();
    if (sk > 3) throw WireError("bad src party");
    e.src.kind = static_cast<PartyId::Kind>(sk);
    e.src.name = r.str();
    uint8_t dk = r.u8();
    if (dk > 3) throw WireError("bad dst party");
    e.dst.kind = static_cast<PartyId::Kind>(dk);
    e.dst.name = r.str();
    uint8_t mode = r.u8();
    if (mode > 1) throw WireError("bad transfer mode");
    e.mode = static_cast<TransferMode>(mode);
    e.partition_index = r.u32();
    e.partition_total = r.u32();
    e.credential = r.bytes();
    e.payload = r.bytes();
    e.sent_at_ns = r.i64();
    e.recv_at_ns = r.i64();
    r.expect_end();
    return e;
}

Digest Envelope::content_hash() const {
    Envelope stripped = *this;
    stripped.sent_at_ns = 0;
    stripped.recv_at_ns = 0;
    Bytes bytes = stripped.serialize();
    return sha256(as_span(bytes));
}

nlohmann::json Envelope::debug_json() const {
    Payload p;
    std::string payload_kind = "unparseable";
    size_t payload_len = 0;
    try {
        p = Payload::parse(as_span(payload));
        payload_kind = payload_kind_name(p.kind);
        payload_len = p.length();
    } catch (const WireError&) {
    }
    return nlohmann::json{
        {"job_id", job_id},
        {"task_id", task_id},
        {"seq", seq},
        {"flow", flow_level_name(flow)},
        {"variable", variable},
        {"src", src.str()},
        {"dst", dst.str()},
        {"transfer_mode", transfer_mode_name(mode)},
        {"partition", {partition_index, partition_total}},
        {"credential", to_hex(as_span(credential))},
        {"payload_kind", payload_kind},
        {"payload_len", payload_len},
        {"payload_bytes", payload.size()},
        {"sent_at_ns", sent_at_ns},
        {"recv_at_ns", recv_at_ns},
        {"content_hash", content_hash().hex()},
    };
}

std::string make_variable(const std::string& task, const std::string& name,
                          uint64_t iteration) {
    return task + "." + name + "." + std::to_string(iteration);
}

VariableParts parse_variable(const std::string& variable) {
    VariableParts out;
    size_t first = variable.find('.');
    size_t last = variable.rfind('.');
    if (first == std::string::npos || last == first) {
        out.name = variable;
        return out;
    }
    out.task = variable.substr(0, first);
    out.name = variable.substr(first + 1, last - first - 1);
    std::string iter = variable.substr(last + 1);
    try {
        out.iteration = std::stoull(iter);
        out.has_iteration = true;
    } catch (...) {
        out.name = variable.substr(first + 1);
    }
    return out;
}

}  // namespace vigil
