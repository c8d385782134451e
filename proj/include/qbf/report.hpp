#pragma once

#include <string>
#include <vector>

namespace qbf {

/// Outcome of one identity check. `pass` iff no failing entry was found;
/// `failure_location` pinpoints the first offending coefficient.
struct VerifyReport {
	std::string identity;
	int n = 0;
	int k = 0;
	int order = 0;
	bool pass = true;
	std::string failure_location; // empty when pass

	static VerifyReport ok(std::string identity, int n, int k, int order)
	{
		return {std::move(identity), n, k, order, true, {}};
	}
	static VerifyReport fail(std::string identity, int n, int k, int order,
	                         std::string where)
	{
		return {std::move(identity), n, k, order, false, std::move(where)};
	}

	void merge(const VerifyReport &o)
	{
		if (pass && !o.pass) {
			pass = false;
			failure_location = o.identity + ": " + o.failure_location;
		}
	}
};

struct SuiteResult {
	std::vector<VerifyReport> reports;
	double seconds = 0.0;

	bool all_pass() const
	{
		for (const auto &r : reports)
			if (!r.pass)
				return false;
		return true;
	}
};

} // namespace qbf
