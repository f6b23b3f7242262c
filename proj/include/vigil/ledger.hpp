#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vigil/bytes.hpp"
#include "vigil/wire.hpp"

#include "json.hpp"

namespace vigil {

enum class RecordKind : uint8_t {
    Envelope = 1,
    JobMetadata = 2,
    JobSummary = 3,
    Verdict = 4,
    KmsAccess = 5,
};

const char* record_kind_name(RecordKind k);

/// One chained record. record_hash covers index, prev_hash, kind and body;
/// the annex carries wall-clock measurements that legitimately differ
/// between two otherwise identical runs and is deliberately outside the
/// hash so honest reruns produce identical chains.
struct LedgerRecord {
    uint64_t index = 0;
    Digest prev_hash;
    RecordKind kind = RecordKind::Envelope;
    Bytes body;
    Bytes annex;
    int64_t wrote_at_ns = 0;
    Digest record_hash;

    static Digest compute_hash(uint64_t index, const Digest& prev, RecordKind kind,
                               const Bytes& body);
};

struct ChainCheck {
    bool ok = true;
    uint64_t first_bad_index = 0;
    std::string reason;
};

/// Append-only hash-chained store backed by one file. Writes are serialized
/// through a single writer and flushed before append() returns.
class Ledger {
public:
    Ledger() = default;

    static Ledger create(const std::filesystem::path& path);
    static Ledger open(const std::filesystem::path& path);

    const LedgerRecord& append(RecordKind kind, Bytes body, Bytes annex = {});

    const std::vector<LedgerRecord>& records() const { return records_; }
    size_t size() const { return records_.size(); }
    Digest head() const;
    const std::filesystem::path& path() const { return path_; }

    /// Recompute every hash and linkage; report the first broken index.
    static ChainCheck verify_file(const std::filesystem::path& path);
    static std::vector<LedgerRecord> read_all(const std::filesystem::path& path);

    static nlohmann::json record_json(const LedgerRecord& r);
    static void export_jsonl(const std::filesystem::path& ledger_path, std::ostream& out);

private:
    std::filesystem::path path_;
    std::vector<LedgerRecord> records_;
    mutable std::mutex mu_;
};

/// Layout of one job's on-disk store.
struct JobPaths {
    std::filesystem::path dir;

    std::filesystem::path records() const { return dir / "records.ledger"; }
    std::filesystem::path verdicts() const { return dir / "verdicts.ledger"; }
    std::filesystem::path config_copy() const { return dir / "job_config.json"; }
    std::filesystem::path guest_data() const { return dir / "guest_data.csv"; }
    std::filesystem::path host_data() const { return dir / "host_data.csv"; }
    std::filesystem::path kms_store() const { return dir / "kms.store"; }
    std::filesystem::path ground_truth() const { return dir / "attack_ground_truth.json"; }
};

}  // namespace vigil
