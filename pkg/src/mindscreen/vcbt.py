"""Static virtual-CBT content catalogs and the label-to-route mapping."""

from __future__ import annotations

from dataclasses import dataclass

from .schema import DisorderLabel

ITEM_KINDS = ("audio", "video", "reading", "activity", "referral")


@dataclass(frozen=True)
class TherapyItem:
    title: str
    description: str
    kind: str
    link: str | None = None

    def __post_init__(self):
        if self.kind not in ITEM_KINDS:
            raise ValueError(f"unknown therapy item kind: {self.kind!r}")


@dataclass(frozen=True)
class VcbtCatalogEntry:
    disorder: str
    items: tuple[TherapyItem, ...]


_DEPRESSION_ITEMS = (
    TherapyItem("Music therapy", "Curated calming music sessions to reduce stress.",
                "audio"),
    TherapyItem("Job circulars", "Current job postings to help land a new job.",
                "reading"),
    TherapyItem("Local support groups",
                "References to support groups in the local community to join.",
                "referral"),
    TherapyItem("Physical exercise program",
                "Guided exercise videos and trainer advice; regular movement boosts "
                "serotonin and endorphins.", "video"),
    TherapyItem("Healthy food and lifestyle guide",
                "Expert guidance on healthy meals and daily routine.", "reading"),
    TherapyItem("Antidepressant medication advice",
                "Professional advice on antidepressant medication.", "referral"),
)

_INTERNET_ADDICTION_ITEMS = (
    TherapyItem("Time with family and friends",
                "Encouragement to enjoy more offline time with family and friends.",
                "activity"),
    TherapyItem("Daily internet curfew",
                "Set rules that restrict internet usage after a certain time each day.",
                "activity"),
    TherapyItem("30-minute session limit",
                "Set up device rules to limit each online session to 30 minutes.",
                "activity"),
    TherapyItem("Travel and fun activities",
                "Information and guidance on travel and fun activities with friends, "
                "relatives and loved ones.", "reading"),
    TherapyItem("Digital priority coaching",
                "Guidance on digital priorities to keep focus on study and core "
                "deliverables.", "reading"),
)

_ANXIETY_ITEMS = (
    TherapyItem("Recommended reading",
                "Good and impactful books with sourcing.", "reading"),
    TherapyItem("Short e-learning course",
                "Short e-learning course references.", "video"),
    TherapyItem("Motivational therapy",
                "Guidance to transform negative thoughts into positive thoughts.",
                "reading"),
    TherapyItem("Relaxation therapy",
                "Mindfulness meditation or yoga and progressive muscle relaxation.",
                "activity"),
)

CATALOG: dict[str, VcbtCatalogEntry] = {
    DisorderLabel.DEPRESSION.slug: VcbtCatalogEntry("depression", _DEPRESSION_ITEMS),
    DisorderLabel.INTERNET_ADDICTION.slug: VcbtCatalogEntry("internet_addiction",
                                                            _INTERNET_ADDICTION_ITEMS),
    DisorderLabel.ANXIETY.slug: VcbtCatalogEntry("anxiety", _ANXIETY_ITEMS),
}


def vcbt_content(disorder: str) -> VcbtCatalogEntry:
    """Catalog for one disorder name; raises KeyError for unknown names."""
    try:
        return CATALOG[disorder]
    except KeyError:
        raise KeyError(f"no therapy catalog for disorder {disorder!r}") from None


def route_for(label: DisorderLabel) -> str:
    return f"vcbt/{label.slug}"
