#pragma once

/* Machine-readable check reports: one record per named check, with the
 * anchor of the claim it verifies. JSON schema is stable:
 * {check, paper_anchor, status, value, expected}. */

#include <string>
#include <vector>

namespace gorlab {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
	std::string check;
	std::string paper_anchor;
	CheckStatus status = CheckStatus::Skipped;
	std::string value;
	std::string expected;
};

inline const char* status_str(CheckStatus s)
{
	switch (s) {
	case CheckStatus::Pass:
		return "PASS";
	case CheckStatus::Fail:
		return "FAIL";
	default:
		return "SKIPPED";
	}
}

inline std::string json_escape(const std::string& s)
{
	std::string out;
	for (char c : s) {
		switch (c) {
		case '"':
			out += "\\\"";
			break;
		case '\\':
			out += "\\\\";
			break;
		case '\n':
			out += "\\n";
			break;
		case '\t':
			out += "\\t";
			break;
		default:
			out += c;
		}
	}
	return out;
}

inline std::string render_report_text(const std::vector<CheckResult>& results)
{
	std::string out;
	for (const CheckResult& r : results) {
		out += status_str(r.status);
		out += "  ";
		out += r.check;
		out += "  [";
		out += r.paper_anchor;
		out += "]";
		if (!r.value.empty()) {
			out += "  value=";
			out += r.value;
		}
		if (r.status == CheckStatus::Fail && !r.expected.empty()) {
			out += "  expected=";
			out += r.expected;
		}
		out += "\n";
	}
	return out;
}

inline std::string render_report_json(const std::vector<CheckResult>& results,
                                      const std::string& timestamp)
{
	std::string out = "{\n  \"timestamp\": \"" + json_escape(timestamp) + "\",\n  \"checks\": [\n";
	for (size_t i = 0; i < results.size(); ++i) {
		const CheckResult& r = results[i];
		out += "    {\"check\": \"" + json_escape(r.check) + "\", \"paper_anchor\": \"" +
		       json_escape(r.paper_anchor) + "\", \"status\": \"" + status_str(r.status) +
		       "\", \"value\": \"" + json_escape(r.value) + "\", \"expected\": \"" +
		       json_escape(r.expected) + "\"}";
		out += (i + 1 < results.size()) ? ",\n" : "\n";
	}
	out += "  ]\n}\n";
	return out;
}

inline bool all_passed(const std::vector<CheckResult>& results)
{
	for (const CheckResult& r : results)
		if (r.status == CheckStatus::Fail) return false;
	return true;
}

} // namespace gorlab
