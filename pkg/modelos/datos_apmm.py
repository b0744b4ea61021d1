"""
Datos del Modelo APMM Canónico
==============================

Niveles, actividades y los 95 enunciados del cuestionario de madurez del
proceso de arquitectura de líneas de productos de software. Los textos se
conservan literalmente, incluida su puntuación original.

Autor: Equipo Evaluador APMM
Versión: 1.0.0
"""

from modelos.modelo_madurez import Actividad, Dimension

# (índice, nombre)
NIVELES_APMM = (
    (1, "Independent Product Development"),
    (2, "Standardized Infrastructure"),
    (3, "Software Platform"),
    (4, "Software Product Family"),
    (5, "Configurable Product Base"),
)

# El orden define el número de actividad J de S.I.J.K
ACTIVIDADES_APMM = (
    Actividad("DE", "Domain Engineering", Dimension.DISENO_ARQUITECTURA),
    Actividad("RMM", "Requirements Management and Modeling", Dimension.DISENO_ARQUITECTURA),
    Actividad("AAE", "Architecture Analysis and Evaluation", Dimension.DISENO_ARQUITECTURA),
    Actividad("CM", "Commonality Management", Dimension.GESTION_LINEA_PRODUCTOS),
    Actividad("VM", "Variability Management", Dimension.GESTION_LINEA_PRODUCTOS, es_compuerta=True),
    Actividad("AAM", "Architecture Artifact Management", Dimension.DOCUMENTACION),
)

# (id, nivel, actividad, texto)
ENUNCIADOS_APMM = (
    # Nivel 1
    ("S.1.1.1", 1, "DE", "The organization does not have an established unit to perform domain engineering, and most of the activities are performed solely on an ad hoc and as needed basis."),
    ("S.1.1.2", 1, "DE", "The organization does not have sufficient knowledge about the domain of SPL."),
    ("S.1.2.1", 1, "RMM", "SPLA requirements are not clearly defined and identified."),
    ("S.1.2.2", 1, "RMM", "The requirements are managed at individual product levels."),
    ("S.1.2.3", 1, "RMM", "There is a lack of technical understanding regarding SPLA requirements."),
    ("S.1.2.4", 1, "RMM", "The organization is not using any modeling techniques to elaborate SPLA requirements."),
    ("S.1.2.5", 1, "RMM", "The organization does not have the technical means and knowledge to model SPLA requirements."),
    ("S.1.3.1", 1, "AAE", "The organization lacks an understanding of SPLA analysis techniques."),
    ("S.1.3.2", 1, "AAE", "There is no evidence that the organization performs a systematic analysis of SPLA."),
    ("S.1.4.1", 1, "CM", "The commonality among independent products does not result from any planning."),
    ("S.1.4.2", 1, "CM", "The commonality among products results from the ad hoc reusability of software assets."),
    ("S.1.5.1", 1, "VM", "There is no evidence of planned variability among successive products."),
    ("S.1.5.2", 1, "VM", "The SPLA does not define any variation points"),
    ("S.1.6.1", 1, "AAM", "SPLA artifacts are not maintained and documented."),
    ("S.1.6.2", 1, "AAM", "The requirements are documented only at the individual product level."),

    # Nivel 2
    ("S.2.1.1", 2, "DE", "The organizational structure clearly defines and supports the presence of a domain-engineering unit."),
    ("S.2.1.2", 2, "DE", "The roles and responsibilities in the domain-engineering units are not yet explicitly defined."),
    ("S.2.1.3", 2, "DE", "The organization is acquiring knowledge about the domain of the SPL."),
    ("S.2.2.1", 2, "RMM", "The organization is making an effort to acquire technical knowledge and to understand the managing of SPLA requirements"),
    ("S.2.2.2", 2, "RMM", "The organization collects and analyzes data from the consumer market in order to identify the potential requirements of SPLA."),
    ("S.2.2.3", 2, "RMM", "The organization is using a notation language to model SPLA requirements."),
    ("S.2.2.4", 2, "RMM", "The organization understands that requirement models facilitate the understanding of SPLA requirements, but there is a lack of technical knowledge for developing architectural models."),
    ("S.2.3.1", 2, "AAE", "The organization is acquiring knowledge and skills to analyze the SPLA."),
    ("S.2.3.2", 2, "AAE", "The organization has not yet established clear guidelines or a well-documented methodology to evaluate the SPLA."),
    ("S.2.3.3", 2, "AAE", "The quality and functional attributes necessary for evaluating the SPLA are not yet defined."),
    ("S.2.4.1", 2, "CM", "The organization understands the importance of commonality among successive products."),
    ("S.2.4.2", 2, "CM", "There is a lack of systematic and planned management of the commonality among products."),
    ("S.2.4.3", 2, "CM", "The organization is continuously learning to manage commonality among products and to avoid making mistakes in this endeavor."),
    ("S.2.5.1", 2, "VM", "There is a lack of systematic and planned management of the variability among products."),
    ("S.2.5.2", 2, "VM", "The uncontrolled variability among products is a response to the actions of competitors."),
    ("S.2.5.3", 2, "VM", "The organization is acquiring knowledge and skills to handle the variability among products."),
    ("S.2.6.1", 2, "AAM", "The significant architectural requirements are identified but the organization does not systematically document these requirements."),
    ("S.2.6.2", 2, "AAM", "The architectural structure is identified but the organization is not using any architectural description language to document the structure, the sub-units or the connection among them."),
    ("S.2.6.3", 2, "AAM", "The component description, interface requirements, interconnection hierarchy and variation mechanisms are not documented."),

    # Nivel 3
    ("S.3.1.1", 3, "DE", "The roles and responsibilities of individuals and groups are well-defined and documented in the organization’s domain and engineering units."),
    ("S.3.1.2", 3, "DE", "The domain requirements of the SPL are clearly defined, stated and documented."),
    ("S.3.1.3", 3, "DE", "The organization has sufficient knowledge of the SPL domain."),
    ("S.3.1.4", 3, "DE", "The domain engineering activity for the product line identifies the potential market segment."),
    ("S.3.2.1", 3, "RMM", "The organization has acquired sufficient knowledge and technical ability to manage SPLA requirements."),
    ("S.3.2.2", 3, "RMM", "The requirements of the SPLA are clearly identified and well documented."),
    ("S.3.2.3", 3, "RMM", "The requirements model explicitly shows the structural layout of the product line architecture."),
    ("S.3.2.4", 3, "RMM", "The requirements model envisions the development of product lines."),
    ("S.3.2.5", 3, "RMM", "The requirements model helps in visualizing the inter-connection of various architectural sub-units."),
    ("S.3.3.1", 3, "AAE", "The organization has established clear guidelines and a well-documented methodology to evaluate the SPLA."),
    ("S.3.3.2", 3, "AAE", "The simulations and prototyping activities are used to analyze the structure of and interconnection among the SPLA components."),
    ("S.3.3.3", 3, "AAE", "The organization is using standard industry practices to evaluate SPLA."),
    ("S.3.3.4", 3, "AAE", "The organization has acquired sufficient knowledge and technical abilities to evaluate their SPLA."),
    ("S.3.4.1", 3, "CM", "The domain engineering activities in the organization identify commonalities among a set of envisioned product line applications."),
    ("S.3.4.2", 3, "CM", "The commonality among products is explicitly identified in the SPLA."),
    ("S.3.5.1", 3, "VM", "The domain engineering activities in the organization identify variability among a set of envisioned product line applications."),
    ("S.3.5.2", 3, "VM", "The organization identifies the variability among products by showing the areas of variation in the SPLA."),
    ("S.3.5.3", 3, "VM", "The organization documents the variability in components, interfaces, classes, and objects, and their design documents highlight the areas of variation."),
    ("S.3.5.4", 3, "VM", "The variability information is available to the application-engineering unit when necessary."),
    ("S.3.6.1", 3, "AAM", "The organization is using an architectural description language to describe and document architectural structure and textures."),
    ("S.3.6.2", 3, "AAM", "Significant architectural requirements are well documented and traceable."),
    ("S.3.6.3", 3, "AAM", "The architectural layers and design decisions are well documented and traceable."),

    # Nivel 4
    ("S.4.1.1", 4, "DE", "The SPL scope is well defined and documented as a result of comprehensive domain engineering activities."),
    ("S.4.1.2", 4, "DE", "Domain analysis identifies a potential set of products for the SPL."),
    ("S.4.1.3", 4, "DE", "The domain-engineering unit generates new ideas and innovations and they take the initiative to experiment with new ideas."),
    ("S.4.1.4", 4, "DE", "The domain-engineering unit works in a collaborative way and provides feedback to other units within the organization."),
    ("S.4.1.5", 4, "DE", "Business plans are based on comprehensive domain engineering activities."),
    ("S.4.2.1", 4, "RMM", "The SPLA requirements comprise the scope of the SPL."),
    ("S.4.2.2", 4, "RMM", "The organization has an established and defined inter-communication protocol among external and internal entities for analyzing and identifying SPLA requirements."),
    ("S.4.2.3", 4, "RMM", "The organization develops and manages variability models to introduce controlled variability among successive products."),
    ("S.4.3.1", 4, "AAE", "The quality and functional attributes that evaluate the SPLA are explicitly defined."),
    ("S.4.3.2", 4, "AAE", "The organization has defined specific qualitative metrics to evaluate the performance of the SPLA."),
    ("S.4.3.3", 4, "AAE", "The organization is committed to learning and improving their knowledge in the area of SPLA evaluation."),
    ("S.4.4.1", 4, "CM", "The management encourages as much commonality as possible and developers concentrate more on product specific issues rather than on issues common to all products."),
    ("S.4.4.2", 4, "CM", "SPL requirements clearly identify, model and document commonality in products."),
    ("S.4.4.3", 4, "CM", "A well-defined organizational unit with a clear set of guidelines handles the management of core SPL assets, which increase the commonality among products."),
    ("S.4.5.1", 4, "VM", "Variability among products is within the scope of the SPL."),
    ("S.4.5.2", 4, "VM", "Market requirements and customer expectations influence the design decisions for creating variability among products."),
    ("S.4.5.3", 4, "VM", "Requirement models clearly illustrate variability among products by explicitly showing the areas of variation."),
    ("S.4.5.4", 4, "VM", "The variability among products helps to retain current customers."),
    ("S.4.6.1", 4, "AAM", "The components description, interface requirements, interconnection hierarchy and variation mechanisms are explicitly documented and traceable."),
    ("S.4.6.2", 4, "AAM", "A well-established configuration management system keeps track of all architecture objects."),

    # Nivel 5
    ("S.5.1.1", 5, "DE", "The domain engineering unit has access to information from internal and external resources and uses both formal and informal mechanisms to disseminate learning and knowledge within the organization."),
    ("S.5.1.2", 5, "DE", "A joint team from the domain and application engineering units supervise the synchronization of activities in both departments."),
    ("S.5.1.3", 5, "DE", "The business and domain engineering units coordinate the supervision of marketing plans and strategies."),
    ("S.5.1.4", 5, "DE", "The domain-engineering activities support the execution of strategic organizational plans."),
    ("S.5.2.1", 5, "RMM", "The requirements of the SPLA include the targeted market segment."),
    ("S.5.2.2", 5, "RMM", "The requirements of the SPLA are regularly reviewed and updated when necessary."),
    ("S.5.2.3", 5, "RMM", "The requirements accommodate the quality attributes of the SPLA."),
    ("S.5.3.1", 5, "AAE", "The organization is continuously improving the process of evaluating the SPLA and is experimenting with innovative methods."),
    ("S.5.3.2", 5, "AAE", "The roles and responsibilities of individuals and groups in analyzing the SPLA are well-defined and documented."),
    ("S.5.3.3", 5, "AAE", "The organization learns from its experience and avoids repeating mistakes in their evaluation of the SPLA."),
    ("S.5.4.1", 5, "CM", "The commonality management allows the maximum amount of software reuse in the organization."),
    ("S.5.4.2", 5, "CM", "The organization regularly conducts market reviews and uses customer feedback to update commonalities among successive products."),
    ("S.5.4.3", 5, "CM", "All of the resulting products share a common SPLA."),
    ("S.5.5.1", 5, "VM", "The organization is continuously improving the process of managing variability among products."),
    ("S.5.5.2", 5, "VM", "The variable requirements of the product line are well defined and documented."),
    ("S.5.5.3", 5, "VM", "The organization regularly conducts market reviews and uses customer feedback to introduce variable features in successive product development."),
    ("S.5.5.4", 5, "VM", "The variability among products helps to retain regular customers and has a tendency to attract new clients."),
    ("S.5.6.1", 5, "AAM", "The architectural objects are regularly reviewed, updated, and communicated to the developers."),
    ("S.5.6.2", 5, "AAM", "The organization has a well-established change management plan to introduce and manage changes in the architectural objects."),
)
