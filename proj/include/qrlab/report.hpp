#pragma once

#include "qrlab/claims.hpp"
#include "qrlab/symmetry.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace qrlab {

inline constexpr std::string_view kSchemaVersion = "1";

/// Envelope for every JSON document the tool emits. Keys serialize in
/// sorted order and nothing time-dependent goes in, so identical runs give
/// identical bytes.
struct ReportDocument
{
	std::string schema_version{kSchemaVersion};
	std::string command;
	nlohmann::json parameters = nlohmann::json::object();
	nlohmann::json payload = nlohmann::json::object();

	friend bool operator==(const ReportDocument &, const ReportDocument &) = default;
};

nlohmann::json to_json(const ReportDocument &doc);
ReportDocument document_from_json(const nlohmann::json &j);
/// Pretty-printed, newline-terminated.
std::string serialize(const ReportDocument &doc);
ReportDocument parse_document(std::string_view text);

std::string_view form_name(ClaimForm f) noexcept;

nlohmann::json to_json(const SweepReport &report);
SweepReport sweep_from_json(const nlohmann::json &j);

nlohmann::json to_json(const ClaimOutcome &outcome);
nlohmann::json orbit_listing(const LatticeRect &rect, u64 cap = kDefaultEnumerationCap);
nlohmann::json claims_listing();

/// Full report for one ordered pair: symbols by every method in both
/// orientations, Gauss counts, partition counts, reciprocity and the
/// selected claim verdicts. Claims that exceed the cap are marked skipped.
nlohmann::json pair_report(PrimePair pair, const std::vector<ClaimCheck> &checks, u64 cap = kDefaultEnumerationCap);

/// One row per recorded verdict:
/// claim_id,p,q,form,holds,witness_summary (RFC 4180, CRLF line ends).
std::string sweep_to_csv(const SweepReport &report);
std::string csv_field(std::string_view value);

} // namespace qrlab
