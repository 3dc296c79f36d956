#include "digitroot/complexity.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace digitroot {

OpCounters predicted_counts(std::size_t digit_count, RootKind kind) {
    if (digit_count == 0) {
        throw InternalError("predicted_counts: digit count must be >= 1");
    }
    const unsigned k = exponent(kind);
    const std::uint64_t iterations = (digit_count - 1) / k;
    OpCounters out;
    if (kind == RootKind::cube) {
        out.multiplications = 12 * iterations;
        out.additions = 3 * iterations;
        out.divisions = 3 * iterations;
        out.subtractions = 4 * iterations;
    } else {
        out.multiplications = 5 * iterations;
        out.additions = 3 * iterations;
        out.divisions = 2 * iterations;
        out.subtractions = 3 * iterations;
    }
    out.lookups = 1;
    return out;
}

std::size_t count_adjustments(const std::vector<TraceEvent>& trace) {
    std::size_t n = 0;
    for (const TraceEvent& event : trace) {
        if (event.kind == TraceEventKind::clamp ||
            event.kind == TraceEventKind::decrement_adjust) {
            ++n;
        }
    }
    return n;
}

ComplexityReport compare(const RootResult& result, RootKind kind) {
    ComplexityReport report;
    report.digit_count = std::max<std::size_t>(1, result.input.digit_count());
    report.period = exponent(kind);
    report.iterations = result.iterations;
    report.predicted = predicted_counts(report.digit_count, kind);
    report.measured = result.counters;
    report.adjustments = count_adjustments(result.trace);

    const auto delta = [](std::uint64_t measured, std::uint64_t predicted) {
        return static_cast<std::int64_t>(measured) - static_cast<std::int64_t>(predicted);
    };
    report.deltas.multiplications =
        delta(report.measured.multiplications, report.predicted.multiplications);
    report.deltas.additions = delta(report.measured.additions, report.predicted.additions);
    report.deltas.divisions = delta(report.measured.divisions, report.predicted.divisions);
    report.deltas.subtractions =
        delta(report.measured.subtractions, report.predicted.subtractions);
    report.deltas.lookups = delta(report.measured.lookups, report.predicted.lookups);
    return report;
}

std::string render_text(const ComplexityReport& report) {
    std::ostringstream out;
    out << "complexity (k=" << report.period << ", N=" << report.digit_count << ")\n";
    out << "iterations: " << report.iterations << " (nominal N/k = " << report.digit_count
        << "/" << report.period << ")\n";
    out << "            " << std::setw(8) << "M" << std::setw(8) << "A" << std::setw(8) << "D"
        << std::setw(8) << "S" << std::setw(8) << "lookups" << "\n";
    const auto row = [&](const char* label, const OpCounters& c) {
        out << std::left << std::setw(12) << label << std::right << std::setw(8)
            << c.multiplications << std::setw(8) << c.additions << std::setw(8) << c.divisions
            << std::setw(8) << c.subtractions << std::setw(8) << c.lookups << "\n";
    };
    row("predicted", report.predicted);
    row("measured", report.measured);
    out << std::left << std::setw(12) << "delta" << std::right << std::setw(8)
        << report.deltas.multiplications << std::setw(8) << report.deltas.additions
        << std::setw(8) << report.deltas.divisions << std::setw(8)
        << report.deltas.subtractions << std::setw(8) << report.deltas.lookups << "\n";
    out << "adjustments: " << report.adjustments << "\n";
    return out.str();
}

} // namespace digitroot
