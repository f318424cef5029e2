#include "devmatch/catalog.hpp"

#include "support/requirement_table.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace devmatch;

namespace {

void expect_load_error(std::string_view text, ErrorKind kind) {
    try {
        load_catalog(text);
        ADD_FAILURE() << "accepted:\n" << text;
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

DeviceSpec random_device(std::mt19937& rng, int index) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
    DeviceSpec d;
    d.id = "dev_" + std::to_string(index);
    d.display_name = index % 3 == 0 ? "Gerät Nr. " + std::to_string(index) : "Device " + std::to_string(index);
    d.device_class = static_cast<DeviceClass>(pick(3));
    if (d.device_class == DeviceClass::Output) {
        d.modality = pick(2) ? OutputModality::Visual : OutputModality::Auditory;
    } else {
        for (LimbKind kind : {LimbKind::Arm, LimbKind::Leg}) {
            if (pick(2)) continue;
            for (Category c : kLimbCategories) {
                if (pick(3) == 0) continue;
                const int max = find_scale(default_scales(), c, kind)->max_degree();
                (kind == LimbKind::Arm ? d.arm : d.leg)[c] = pick(max + 1);
            }
        }
    }
    for (Category c : kPerceptionCategories) {
        if (pick(2)) d.perception[c] = pick(3);
    }
    return d;
}

} // namespace

TEST(DefaultCatalog, HandButtonPressureIsZero) {
    const DeviceSpec* hb = default_catalog().find("hand_button");
    ASSERT_NE(hb, nullptr);
    EXPECT_EQ(hb->cell(LimbKind::Arm, Category::PressureSensitivity), RequirementCell::max_degree(0));
    EXPECT_EQ(hb->cell(LimbKind::Arm, Category::MovementDisturbance), RequirementCell::unconstrained());
    EXPECT_TRUE(hb->operated_by(LimbKind::Arm));
    EXPECT_FALSE(hb->operated_by(LimbKind::Leg));
}

TEST(DefaultCatalog, MouthMouseIsLimbIndependent) {
    const DeviceSpec* mm = default_catalog().find("mouth_mouse");
    ASSERT_NE(mm, nullptr);
    EXPECT_TRUE(mm->limb_independent());
    for (LimbKind kind : {LimbKind::Arm, LimbKind::Leg}) {
        for (Category c : kLimbCategories) EXPECT_FALSE(mm->cell(kind, c).constrained());
    }
    EXPECT_EQ(mm->perception_cell(Category::Vision), RequirementCell::max_degree(0));
    EXPECT_FALSE(mm->perception_cell(Category::Hearing).constrained());
}

TEST(DefaultCatalog, ClassCounts) {
    const auto& c = default_catalog();
    EXPECT_EQ(list_devices(c, DeviceClass::OneDimensionalInput).size(), 2u);
    EXPECT_EQ(list_devices(c, DeviceClass::MultiDimensionalInput).size(), 9u);
    EXPECT_EQ(list_devices(c, DeviceClass::Output).size(), 3u);
}

TEST(DefaultCatalog, OutputsAreLimbFreeWithModalities) {
    const auto outputs = list_devices(default_catalog(), DeviceClass::Output);
    ASSERT_EQ(outputs.size(), 3u);
    EXPECT_EQ(outputs[0].id, "display");
    EXPECT_EQ(outputs[1].id, "signal_tower");
    EXPECT_EQ(outputs[2].id, "speaker");
    EXPECT_EQ(outputs[0].modality, OutputModality::Visual);
    EXPECT_EQ(outputs[1].modality, OutputModality::Visual);
    EXPECT_EQ(outputs[2].modality, OutputModality::Auditory);
    for (const auto& d : outputs) EXPECT_TRUE(d.limb_independent());
}

TEST(DefaultCatalog, MatchesLiteralTableCellForCell) {
    const auto& devices = default_catalog().devices();
    ASSERT_EQ(devices.size(), oracle::kTable.size());
    for (std::size_t i = 0; i < devices.size(); ++i) {
        const auto& row = oracle::kTable[i];
        const auto& d = devices[i];
        EXPECT_EQ(d.id, oracle::device_id(row));
        EXPECT_EQ(d.display_name, row.device);
        EXPECT_EQ(device_class_key(d.device_class), row.device_class);
        for (std::size_t col = 0; col < 7; ++col) {
            const Category c = *category_from_key(oracle::kColumnKeys[col]);
            if (col < 5) {
                for (LimbKind kind : {LimbKind::Arm, LimbKind::Leg}) {
                    const auto want = oracle::cell(row, col, std::string(limb_kind_key(kind)));
                    const auto got = d.cell(kind, c);
                    EXPECT_EQ(got.constrained(), want.has_value()) << d.id << " " << oracle::kColumnKeys[col];
                    if (want && got.constrained()) {
                        EXPECT_EQ(got.max(), *want) << d.id;
                    }
                }
            } else {
                const auto want = oracle::cell(row, col, "");
                const auto got = d.perception_cell(c);
                EXPECT_EQ(got.constrained(), want.has_value()) << d.id;
                if (want && got.constrained()) {
                    EXPECT_EQ(got.max(), *want) << d.id;
                }
            }
        }
    }
}

TEST(ListDevices, OrderAndFilter) {
    EXPECT_EQ(list_devices(default_catalog()).size(), 14u);
    EXPECT_EQ(list_devices(default_catalog()).front().id, "hand_button");
    EXPECT_TRUE(list_devices(Catalog{}).empty());
    EXPECT_TRUE(list_devices(Catalog{}, DeviceClass::Output).empty());
}

TEST(LoadCatalog, DefaultRoundTrips) {
    EXPECT_EQ(load_catalog(serialize_catalog(default_catalog())), default_catalog());
}

TEST(LoadCatalog, RangeError) {
    expect_load_error(R"({"version": "t", "devices": [
        {"id": "x", "name": "X", "class": "one_dim_input", "arm": {"mobility": 7}}]})",
                      ErrorKind::OutOfRange);
}

TEST(LoadCatalog, DuplicateId) {
    expect_load_error(R"({"version": "t", "devices": [
        {"id": "hand_button", "name": "A", "class": "one_dim_input", "arm": {"mobility": 1}},
        {"id": "hand_button", "name": "B", "class": "one_dim_input", "arm": {"mobility": 1}}]})",
                      ErrorKind::DuplicateId);
}

TEST(LoadCatalog, OutputWithLimbConstraint) {
    expect_load_error(R"({"version": "t", "devices": [
        {"id": "d", "name": "D", "class": "output", "modality": "visual", "arm": {"mobility": 1}}]})",
                      ErrorKind::InvalidDevice);
}

TEST(LoadCatalog, ModalityRules) {
    expect_load_error(R"({"version": "t", "devices": [{"id": "d", "name": "D", "class": "output"}]})",
                      ErrorKind::InvalidDevice);
    expect_load_error(R"({"version": "t", "devices": [
        {"id": "b", "name": "B", "class": "one_dim_input", "modality": "visual", "arm": {"mobility": 1}}]})",
                      ErrorKind::InvalidDevice);
    expect_load_error(R"({"version": "t", "devices": [{"id": "d", "name": "D", "class": "output", "modality": "haptic"}]})",
                      ErrorKind::UnknownKey);
}

TEST(LoadCatalog, UnknownKeysRejected) {
    expect_load_error(R"({"version": "t", "devices": [
        {"id": "x", "name": "X", "class": "one_dim_input", "arm": {"mobilty": 1}}]})",
                      ErrorKind::UnknownKey);
    expect_load_error(R"({"version": "t", "devices": [
        {"id": "x", "name": "X", "class": "one_dim_input", "arm": {"vision": 1}}]})",
                      ErrorKind::UnknownKey);
    expect_load_error(R"({"version": "t", "devices": [
        {"id": "x", "name": "X", "class": "one_dim_input", "price": 12}]})",
                      ErrorKind::UnknownKey);
    expect_load_error(R"({"version": "t", "devices": [], "vendor": "acme"})", ErrorKind::UnknownKey);
    expect_load_error(R"({"version": "t", "devices": [{"id": "x", "name": "X", "class": "two_dim_input"}]})",
                      ErrorKind::UnknownKey);
}

TEST(LoadCatalog, Malformed) {
    expect_load_error("[]", ErrorKind::Malformed);
    expect_load_error(R"({"devices": []})", ErrorKind::Malformed);
    expect_load_error(R"({"version": "t", "devices": [{"id": "x", "class": "output", "modality": "visual"}]})",
                      ErrorKind::Malformed);
    expect_load_error(R"({"version": "t", "devices": [{"id": "x", "name": "X", "class": "one_dim_input", "arm": {"mobility": "1"}}]})",
                      ErrorKind::Malformed);
}

TEST(LoadCatalog, EmptyDeviceListIsValid) {
    const auto c = load_catalog(R"({"version": "empty", "devices": []})");
    EXPECT_EQ(c.version(), "empty");
    EXPECT_TRUE(c.devices().empty());
}

TEST(CatalogProperties, GeneratedCatalogsRoundTrip) {
    std::mt19937 rng(99);
    for (int round = 0; round < 300; ++round) {
        std::vector<DeviceSpec> devices;
        const int n = static_cast<int>(rng() % 20);
        for (int i = 0; i < n; ++i) devices.push_back(random_device(rng, i));
        const Catalog c("gen-" + std::to_string(round), default_scales(), std::move(devices));
        ASSERT_EQ(load_catalog(serialize_catalog(c)), c);
    }
}

TEST(CatalogProperties, SerializationIsReproducible) {
    EXPECT_EQ(serialize_catalog(default_catalog()), serialize_catalog(default_catalog()));
    EXPECT_EQ(serialize_catalog(load_catalog(serialize_catalog(default_catalog()))),
              serialize_catalog(default_catalog()));
}
