#include "digitroot/tableau.hpp"

#include <algorithm>
#include <vector>

namespace digitroot {

namespace {

struct Line {
    std::ptrdiff_t start; // leftmost column, may be negative before shifting
    std::string text;
};

} // namespace

std::string render_text(const RootResult& result, const DecimalNatural& input, RootKind kind) {
    if (input.is_zero()) {
        return "0\nRoot result: 0\n";
    }

    const PlaceMarking marking = mark_places(input, kind);
    const std::ptrdiff_t top = static_cast<std::ptrdiff_t>(marking.top_index);
    std::vector<Line> lines;

    std::string marker;
    for (std::size_t index = marking.top_index + 1; index-- > 0;) {
        marker.push_back(marking.is_anchor(index) ? '-' : '^');
    }
    lines.push_back({0, std::move(marker)});
    lines.push_back({0, input.to_string()});

    // Column c holds digit place top - c; values right-align to the column of
    // their units place.
    const auto column_of = [top](std::size_t position) {
        return top - static_cast<std::ptrdiff_t>(position);
    };

    std::string pending_trial;
    std::uint64_t pending_digit = 0;
    bool pending_adjusted = false;
    const TraceEvent* last_subtract = nullptr;

    for (const TraceEvent& event : result.trace) {
        switch (event.kind) {
        case TraceEventKind::bring_down: {
            std::string text = event.result.to_string();
            const std::ptrdiff_t start =
                column_of(event.position) - static_cast<std::ptrdiff_t>(text.size()) + 1;
            lines.push_back({start, std::move(text)});
            break;
        }
        case TraceEventKind::divide_estimate:
            pending_trial = event.result.to_string();
            pending_digit = to_u64(event.result);
            pending_adjusted = false;
            break;
        case TraceEventKind::clamp:
            pending_adjusted = true;
            pending_digit = 9;
            break;
        case TraceEventKind::decrement_adjust:
            pending_adjusted = true;
            pending_digit = to_u64(event.result);
            break;
        case TraceEventKind::subtract: {
            if (pending_adjusted) {
                lines.push_back({0, "(trial " + pending_trial + " -> " +
                                        std::to_string(pending_digit) + ")"});
                pending_adjusted = false;
            }
            std::string digits = event.operands[1].to_string();
            const std::ptrdiff_t start = column_of(event.position) -
                                         static_cast<std::ptrdiff_t>(digits.size()) + 1 - 1;
            lines.push_back({start, "-" + std::move(digits)});
            last_subtract = &event;
            break;
        }
        default:
            break;
        }
    }

    if (last_subtract != nullptr) {
        std::string text = last_subtract->result.to_string();
        const std::ptrdiff_t start =
            column_of(last_subtract->position) - static_cast<std::ptrdiff_t>(text.size()) + 1;
        lines.push_back({start, std::move(text)});
    }

    std::ptrdiff_t min_start = 0;
    for (const Line& line : lines) {
        min_start = std::min(min_start, line.start);
    }
    const std::ptrdiff_t margin = -min_start;

    std::string out;
    for (const Line& line : lines) {
        out.append(static_cast<std::size_t>(margin + line.start), ' ');
        out += line.text;
        out.push_back('\n');
    }
    out += "Root result: " + result.root.to_string() + "\n";
    return out;
}

} // namespace digitroot
