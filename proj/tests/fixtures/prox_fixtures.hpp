// Generated by tests/oracles/gen_prox_fixtures.py. Do not edit.
#pragma once

#include <array>
#include <vector>

namespace hsu::fixtures {

enum class ProxKind { L1, L21, HorizontalTv };

struct ProxFixture {
  ProxKind kind;
  int m;
  int n_r;
  int n_c;
  double lambda;
  double lambda_tv;
  double sigma;
  std::vector<double> input;     // column-major m x n
  std::vector<double> expected;  // column-major m x n
};

inline const std::vector<ProxFixture>& prox_fixtures() {
  static const std::vector<ProxFixture> cases = {
      {ProxKind::L1, 3, 2, 2, 0.3, 0.2, 1.0,
       {-0.016783680835937065, 0.7266783803537762, -2.627210772609721, -0.4766002064767883, -0.18254340972553518, 0.06238067155926491, 0.5243937554436935, -0.7890754866739529, -0.7969272980706672, -2.384845265516964, 0.44780591269694503, 0.9145430368403269},
       {0.0, 0.2266783803537762, 0.0, 0.0, 0.0, 0.0, 0.024393755443693488, 0.0, 0.0, 0.0, 0.0, 0.41454303684032684}},
      {ProxKind::L1, 4, 2, 3, 0.1, 0.5, 1.0,
       {0.9636626066494767, 1.585905549187151, 0.6594433273480216, 1.4339176236699485, -1.0917940361553435, 0.643199584444663, -0.0038899893601853086, 0.6377410861118629, -1.0997519291577749, 0.3521988789827341, 1.584027155228149, 2.8448337301603406, -1.9050557459834423, -1.001170665665185, 0.6037055288309683, -2.643080932078588, -0.8815339411301839, 0.5936553192664766, 2.3532379344145524, 1.6113874427719972, 0.7791215880244498, -0.9235342972885052, -0.31232167120738513, -1.2354774151064107},
       {0.3636626066494767, 0.9859055491871509, 1.0594433273480215, 1.8339176236699484, 0.0, 0.043199584444662986, 0.0, 0.03774108611186289, 0.0, 0.6229270991246054, 1.484027155228149, 1.878110586466169, 0.0, 0.0, 0.0, 0.0, 0.0, 0.6229270991246054, 1.7532379344145523, 1.878110586466169, 0.17912158802444977, 0.0, 0.0, 0.0}},
      {ProxKind::L1, 4, 3, 2, 0.6, 0.1, 0.5,
       {-1.002970108462508, -2.5555183921346636, -0.47006164062867556, -1.1573227673533089, 0.2724553274064301, -1.0104468573560397, 2.0602481673448994, 1.614903949297558, -1.9658390416597042, 0.0811296496406497, -0.9137027730118674, -1.4929526894994964, -1.491871539867838, 0.10210862284406674, 0.38865569819846885, -1.7504953456823202, -0.45831281237888205, -0.6934622358336235, -0.43439250942042845, -0.5227043604155497, -0.18372574744049358, 0.29386681634055467, 1.5818436796966289, 0.43819028440678565},
       {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.7102481673448993, 1.264903949297558, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.038655698198468855, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.2318436796966288, 0.08819028440678565}},
      {ProxKind::L1, 2, 1, 6, 0.2, 0.4, 2.0,
       {-1.9815354199949524, 0.7992468721389245, -0.4562841831502716, 1.67014955257715, 0.2940443014360223, 1.7095893119522403, 0.2466635191560535, -1.3637435569382927, 1.6133489048199894, 3.5778931185845804, 1.4764103021782813, 0.22660952594931114},
       {0.0, 0.7263285788894382, 0.0, 0.7263285788894381, 0.0, 0.7263285788894381, 0.0, 0.0, 0.7448796034991353, 1.5778931185845804, 0.7448796034991353, 0.6266095259493112}},
      {ProxKind::L1, 4, 6, 1, 0.3, 0.3, 1.0,
       {-0.6089135928757432, -1.5958104695525859, -0.8579144192477053, -1.380120357527198, 1.200223982544963, 0.8635988401991532, 0.8923597161567658, 0.5853519080423588, -0.43286572739005763, -0.019837591232673868, 3.1968102711601407, 1.086058644578936, 1.2407355481918814, -0.4522244538561934, -1.1966353130516902, -1.066284095945083, -1.5020983156795622, 0.5296101800455425, 2.0327509743823056, 1.9188266538173193, 1.3880377055635196, -0.5629625983202831, 1.9223365408661455, 1.616864685147602},
       {0.0, 0.0, 0.0, 0.0, 0.9002239825449629, 0.5635988401991532, 0.5923597161567657, 0.2853519080423588, 0.0, 0.0, 2.896810271160141, 0.7860586445789359, 0.9407355481918813, 0.0, 0.0, 0.0, 0.0, 0.2296101800455425, 1.7327509743823055, 1.6188266538173193, 1.0880377055635195, 0.0, 1.6223365408661454, 1.316864685147602}},
      {ProxKind::L1, 3, 2, 3, 0.05, 1.2, 1.0,
       {2.847656543867536, -1.876371481175853, 0.5440702758763301, 0.8847516320492681, 0.7296822021658662, 2.1574970399475752, 1.719045684639422, -1.6008248057700392, -0.38453201562466205, 3.018174787120737, 1.9465400381895224, 0.3751015839949042, 0.6044858278583711, 0.5207475883759112, 2.4001724347935394, -0.45033418478858184, 1.5165858998448314, -1.5874665482855737},
       {1.6737293521217769, 0.0, 0.629769130125834, 1.3014632095850027, 1.3476027134000732, 0.9074970399475755, 1.6737293521217764, 0.0, 0.629769130125834, 1.3014632095850027, 1.3476027134000734, 0.3251015839949042, 1.673729352121776, 0.0, 1.1501724347935396, 0.6996658152114181, 1.3476027134000734, 0.0}},
      {ProxKind::L1, 1, 1, 5, 0.0, 0.7, 1.0,
       {0.5887908455250879, 1.7628861148559265, -1.2953000836173352, -0.7495784331389015, -1.5748664991740826},
       {0.8258384801905072, 0.8258384801905072, 0.0, 0.0, 0.0}},
      {ProxKind::L21, 3, 2, 2, 0.3, 0.2, 1.0,
       {2.0711337839384774, -1.295682133258892, 1.4878467666349937, 0.015930735873595003, 1.68979860422541, -1.0588053490686888, -0.17272904258652677, 0.01580061612797623, 2.7200662450559796, -1.818816149718044, -0.3013297943042939, -0.25232180698292533},
       {1.5711656415466817, 0.0, 1.5209027997754305, 0.0, 1.18979860422541, 0.0, 0.022899052792443586, 0.0, 2.2708079213650882, 0.0, 0.0, 0.0}},
      {ProxKind::L21, 4, 2, 3, 0.4, 0.3, 1.0,
       {-0.4695647119720426, 0.3572359772157511, 2.378667285734453, 0.37384658242254065, -0.09774769839267494, 0.8084197208936985, -1.3381078265233914, 3.143466702907118, 0.35601240484275337, 1.6158831859998037, 0.17060367446645808, -0.9292881083132343, 1.3517528037781168, -0.41512976003743846, 0.5929414993566313, 0.7906286707131165, -0.7482535535986716, 1.7505175671696693, 1.8197526145426546, -0.055350930331680426, -0.9360409553623743, -1.2298393874889608, 2.490251319863988, 1.1586400549945601},
       {0.0, 0.5440188433972989, 1.842290171148208, 0.06478256460213233, 0.09833127259030838, 0.4208380522513166, 0.0, 2.494456200032161, 0.0, 1.269087397040233, 0.6829739348202792, 0.0, 0.36548810214458105, 0.0, 0.525514739096227, 0.9865953965002744, 0.0, 1.269087397040233, 1.3469328754839498, 0.0, 0.0, 0.0, 1.941185348238213, 0.9865953965002744}},
      {ProxKind::L21, 4, 3, 2, 1.5, 0.1, 0.5,
       {-1.1277864854384512, 1.1881064051050878, 0.2588323646200079, -1.346135796683041, -1.3467556885306826, 0.970736327451899, 1.4883077249976997, -0.6957585704147211, 2.2247410031030843, 2.1501945037664174, -0.07165921777510403, 1.6787183826918917, 1.8960455293434546, 0.6493744212719514, -1.287325571590069, -1.724051325649267, 1.141677344026517, -2.121778617803658, 2.0255878482691587, 1.751964002879191, -0.7533192972466953, -0.024390000863347416, 0.8783983816537695, 0.33430804437350875},
       {0.0, 0.8164845247063375, 0.14963054029468337, 0.0, 0.0, 0.660541896018947, 1.1022133300541004, 0.0, 1.6407327666047753, 1.5066924353529585, 0.0, 1.1169417794486696, 1.3927485545709797, 0.5017355050306328, 0.0, 0.0, 0.8236156794526943, 0.0, 1.4155290425122324, 1.1671721287946435, 0.0, 0.018372770664522135, 0.5935559732402658, 0.26355060242491735}},
      {ProxKind::L21, 2, 1, 6, 0.2, 0.8, 1.0,
       {0.07167087157461105, 3.032527676325222, 1.5991293429266356, -2.229174639235113, -0.3362351012750214, -0.9846714646537458, 0.3836697619293825, 1.6513759275251891, 2.7525025882204393, -0.6942655491768925, -0.9673054445853777, -0.1775027956896993},
       {0.5557940541373331, 2.0325806125782053, 0.5557940541373332, 0.0, 0.5557940541373331, 0.0, 0.555794054137333, 0.04677465607629494, 1.017465197119432, 0.0, 0.0, 0.0}},
      {ProxKind::L21, 4, 2, 2, 0.8, 0.05, 2.0,
       {1.4843728723956042, 1.2424001674367389, -0.89389291799135, 0.9705573550939963, 1.736708057445983, 0.5307970957905529, 0.11191707670041337, 0.32815491965229326, 1.035048926431227, 2.0687720972357844, -2.0284816270266015, -1.7183714171840088, -0.5120078619092965, 0.8848051763247013, 1.2438970170346704, -0.2833960136905808},
       {0.4712060871006247, 0.5121166472639699, 0.0, 0.0, 0.5570947068188413, 0.2406448551157013, 0.0, 0.0, 0.3863424182575175, 0.7510733312767991, 0.0, 0.0, 0.0, 0.29939790340033223, 0.0, 0.0}},
      {ProxKind::L21, 3, 1, 4, 0.1, 0.6, 1.0,
       {1.3233036358327743, 1.2502221724815283, -3.037348199251853, 0.02354536729796869, -2.0981160324399935, 2.0399598941185455, 0.48015589238399525, 0.849965589958783, -1.9283969750292218, 2.017763858267384, -1.1037915149356088, -0.17330979293744592},
       {0.7684169168449858, 0.5502221724815283, 0.0, 0.7684169168449856, 0.0, 0.7399598941185455, 0.7684169168449855, 0.0, 0.0, 1.346639722232227, 0.0, 0.0}},
      {ProxKind::L21, 4, 6, 1, 0.5, 0.5, 1.0,
       {2.173456350036468, 1.5321078569720596, 0.8533229339556387, -0.2759245851599293, 1.3545277250753376, 0.8823715149549463, -0.6363810385893538, 1.1061961576801165, 0.20692595938730313, 1.3936814850422574, -0.752730472468975, -2.269242761162399, -1.0317929557985595, -1.9554239306490497, 0.2593848812644172, 0.1494006327699437, 0.7441839704178942, -0.9885954186618355, 0.48738501215707186, -0.18186234266648543, 0.19759417956580455, 0.5395631373319858, 3.2460337020003927, -1.632663321050917},
       {1.7682970931635333, 1.2012047573786642, 0.7278869885367373, 0.0, 1.1020269345735625, 0.6917978109152335, 0.0, 0.6106948711153324, 0.1683523906419855, 1.092675572731464, 0.0, 0.0, 0.0, 0.0, 0.22125607150895, 0.08247922354506461, 0.6054588359443147, 0.0, 0.4157408580505758, 0.0, 0.16076017047518934, 0.42302883868126945, 2.768876356205672, 0.0}},
      {ProxKind::HorizontalTv, 3, 2, 2, 0.0, 0.4, 1.0,
       {-1.1559161600296102, -0.18556551682649708, 0.04344560410779935, -0.6680163816767806, 0.15161043049590262, 0.4489238618450904, -0.8729248154831246, -0.1592274301782624, 0.24614748639465747, -2.546810226389221, 1.5215078671330573, 0.47532907356936704},
       {-0.9119662708531955, -0.01697754316529726, 0.24618473297644483, -0.9119662708531953, -0.016977543165297204, 0.24618473297644494, -1.2729248154831247, 0.24077256982173761, 0.36073827998201224, -2.146810226389221, 1.1215078671330572, 0.3607382799820123}},
      {ProxKind::HorizontalTv, 4, 3, 2, 0.0, 0.3, 1.0,
       {-1.2895478337965056, 0.8675552566786537, -0.62060720320096, -1.340108212210293, -0.1305635859902482, 0.30850831469045237, -1.688808550032254, -1.1841294217484946, 2.988090575259525, 0.6244587817646927, 0.9401107525966903, -0.22196832309963682, 0.7895513698599694, 1.6127386651314568, 0.8371881720618857, 0.20981935874810267, 0.05416245865433161, 0.5165819089649131, -0.6897660631949178, 1.609826111349853, -0.3750888044371568, 0.16481577741393208, -0.5379254904896724, 1.1419955994652902},
       {-0.9895478337965056, 0.6001741177112663, -0.92060720320096, -1.1121188169793936, -0.1305635859902482, 0.6001741177112663, -1.0888085500322542, -1.1121188169793939, 2.688090575259525, 0.6001741177112663, 0.6401107525966903, -0.5219683230996368, 0.48955136985996944, 1.3127386651314568, 0.5371881720618856, 0.5098193587481027, 0.05416245865433161, 0.5165819089649131, -0.4638457768422951, 1.2259108554075717, -0.07508880443715682, 0.4648157774139321, -0.4638457768422951, 1.2259108554075717}},
      {ProxKind::HorizontalTv, 2, 6, 1, 0.0, 0.9, 1.0,
       {-0.5186708168239482, -2.166784541493209, 1.5146292358113111, -1.5118597222228147, -2.622953961897836, -0.44871083547120344, -0.2894803656053891, -2.056988554873078, 1.0240289909734417, 0.22882219385041808, 2.5111812927668935, 0.6894454036247115},
       {0.047979209493681396, -1.389322131858012, 0.04797920949368151, -1.389322131858012, -0.8229539618978359, -1.2528496951721408, -0.2894803656053891, -1.2528496951721408, 1.0240289909734417, 0.009133798737564758, 1.6111812927668936, 0.009133798737564813}},
      {ProxKind::HorizontalTv, 4, 2, 3, 0.0, 1.5, 0.5,
       {-0.10354513882989919, -0.8896910548500896, 2.188155159168758, 0.40125408960629505, -1.0256784466508395, -1.6949680118089427, 0.3666969967056114, -0.64463486278063, 3.1127762542523225, 0.678937012405692, 1.5615199818891492, -3.9832817503356583, 2.662586783945026, 3.0048675018032234, -0.6912090662772108, 0.778295656100074, 0.7570023901933949, -0.04261492013631918, 2.2351139221319887, 0.3044374150077656, 2.4997151928062853, 1.4309480080006105, 0.9316394521429672, 0.1257711492267987},
       {-0.5646117927403693, -1.2923295333295162, 1.4381551591687578, -0.12169038658716735, -0.5646117927403694, -1.2923295333295162, 1.1166969967056115, -0.12169038658716758, 2.8876815190986744, 1.428937012405692, 0.8115199818891492, -3.2332817503356583, 2.887681519098674, 2.2548675018032234, 0.05879093372278921, 0.028295656100074007, 1.5070023901933949, 0.6941665439321456, 1.583376687137478, 0.21510428211728216, 1.7497151928062853, 0.6941665439321457, 1.583376687137478, 0.21510428211728214}},
      {ProxKind::HorizontalTv, 1, 4, 1, 0.0, 0.2, 2.0,
       {-0.29588220927394154, 3.126872742726023, 0.16990837856503194, 0.17754212823951468},
       {0.10411779072605848, 2.3268727427260227, 0.3737252534022733, 0.37372525340227336}},
      {ProxKind::HorizontalTv, 3, 3, 2, 0.0, 2.0, 1.0,
       {0.29484368052003057, -0.8329560420147997, 0.5089189881159468, -1.3081172265571033, 1.8852271698090368, 0.9203725344832252, -0.5046295502435856, -3.2851316717944705, 0.796891866192295, -0.2163899377161907, 2.5708646877848635, -0.22092300257689773, 0.7751458651153508, 1.2873993908384942, -1.0630859869898528, 1.1974296347733424, 1.5394109660118864, 0.9279933413601078},
       {-0.5059676987602195, -0.4738644361028815, 0.7420611295971556, -0.5059676987602193, -0.4738644361028814, 0.7420611295971558, -0.5059676987602195, -1.2851316717944705, 0.7420611295971556, 0.5853951873908341, 1.7992250148784148, -0.11867188273554759, 0.5853951873908342, 1.7992250148784148, -0.11867188273554763, 0.5853951873908342, 1.7992250148784148, -0.11867188273554752}},
  };
  return cases;
}

}  // namespace hsu::fixtures
