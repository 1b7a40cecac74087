#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pqf::io {

struct LineSeries {
	std::string label;
	std::vector<std::pair<double, double>> points;
};

struct ChartLabels {
	std::string title;
	std::string x_label;
	std::string y_label;
};

std::string svg_line_chart(const ChartLabels& labels, const std::vector<LineSeries>& lines);

/// Scatter plot; `diagonal` draws y = x across the data range.
std::string svg_scatter(const ChartLabels& labels, const std::vector<std::pair<double, double>>& points,
                        bool diagonal);

std::string svg_bar_chart(const ChartLabels& labels, const std::vector<std::pair<std::string, double>>& bars);

/// Range bands (min..max as a thin bar, p25..p75 as a box, mean as a tick)
/// per category.
struct BoxItem {
	std::string label;
	double min = 0.0;
	double p25 = 0.0;
	double mean = 0.0;
	double p75 = 0.0;
	double max = 0.0;
};

std::string svg_box_chart(const ChartLabels& labels, const std::vector<BoxItem>& items);

} // namespace pqf::io
